#pragma once

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace lgcrit {

/// Element of Cliff(Q) = (Lambda_n tensor R[t]) / (a_i a_j + a_j a_i = 2 q_ij t),
/// written in the basis { a_S t^k : S subset of {1..n} sorted, k >= 0 }.
/// Degree of a_S t^k is |S| + 2k; the product preserves it.
template <class Scalar>
struct CliffordElement {
  using Key = std::pair<std::vector<int>, int>;  // (sorted subset, t power)
  int dim = 0;
  std::map<Key, Scalar> coeffs;

  void add(const std::vector<int>& subset, int t_power, const Scalar& c) {
    if (c == Scalar(0)) return;
    Key key{subset, t_power};
    auto [it, inserted] = coeffs.try_emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (it->second == Scalar(0)) coeffs.erase(it);
    }
  }
  bool is_zero() const { return coeffs.empty(); }

  friend bool operator==(const CliffordElement& a, const CliffordElement& b) {
    return a.dim == b.dim && a.coeffs == b.coeffs;
  }
};

/// Multiplication structure of the Clifford algebra of a symmetric matrix Q.
/// Products are computed by normal ordering: a transposition flips the sign
/// and emits a 2 q_ij t cross term, a square a_i a_i collapses to q_ii t.
template <class Scalar>
class CliffordAlgebra {
 public:
  explicit CliffordAlgebra(std::vector<std::vector<Scalar>> q) : q_(std::move(q)) {
    n_ = static_cast<int>(q_.size());
    for (const auto& row : q_)
      if (static_cast<int>(row.size()) != n_)
        throw std::invalid_argument("CliffordAlgebra: Q not square");
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if (!(q_[i][j] == q_[j][i]))
          throw std::invalid_argument("CliffordAlgebra: Q not symmetric");
  }

  int dim() const { return n_; }

  CliffordElement<Scalar> unit() const {
    CliffordElement<Scalar> e;
    e.dim = n_;
    e.add({}, 0, Scalar(1));
    return e;
  }

  /// Generator a_i, 1-based to match the subset convention.
  CliffordElement<Scalar> generator(int i) const {
    if (i < 1 || i > n_) throw std::out_of_range("CliffordAlgebra: generator index");
    CliffordElement<Scalar> e;
    e.dim = n_;
    e.add({i}, 0, Scalar(1));
    return e;
  }

  CliffordElement<Scalar> product(const CliffordElement<Scalar>& x,
                                  const CliffordElement<Scalar>& y) const {
    CliffordElement<Scalar> out;
    out.dim = n_;
    for (const auto& [kx, cx] : x.coeffs)
      for (const auto& [ky, cy] : y.coeffs) {
        CliffordElement<Scalar> word;
        word.dim = n_;
        word.add(kx.first, kx.second + ky.second, cx * cy);
        for (int gen : ky.first) word = times_generator(word, gen);
        for (const auto& [k, c] : word.coeffs) out.add(k.first, k.second, c);
      }
    return out;
  }

 private:
  // x * a_i for a single generator, by recursion on basis words.
  CliffordElement<Scalar> times_generator(const CliffordElement<Scalar>& x, int gen) const {
    CliffordElement<Scalar> out;
    out.dim = n_;
    for (const auto& [key, c] : x.coeffs) word_times_generator(key.first, key.second, c, gen, out);
    return out;
  }

  void word_times_generator(const std::vector<int>& word, int t_power, const Scalar& c, int gen,
                            CliffordElement<Scalar>& out) const {
    if (word.empty() || word.back() < gen) {
      auto grown = word;
      grown.push_back(gen);
      out.add(grown, t_power, c);
      return;
    }
    const int last = word.back();
    std::vector<int> head(word.begin(), word.end() - 1);
    if (last == gen) {
      // a_i a_i = q_ii t
      out.add(head, t_power + 1, c * q_[gen - 1][gen - 1]);
      return;
    }
    // last > gen: a_last a_gen = 2 q_{last,gen} t - a_gen a_last
    out.add(head, t_power + 1, c * Scalar(2) * q_[last - 1][gen - 1]);
    CliffordElement<Scalar> swapped;
    swapped.dim = n_;
    word_times_generator(head, t_power, -c, gen, swapped);
    for (const auto& [k, cc] : swapped.coeffs) {
      auto grown = k.first;
      grown.push_back(last);  // every index in k.first is < last by construction
      out.add(grown, k.second, cc);
    }
  }

  std::vector<std::vector<Scalar>> q_;
  int n_ = 0;
};

}  // namespace lgcrit
