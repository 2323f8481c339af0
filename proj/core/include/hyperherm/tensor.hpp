#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "hyperherm/errors.hpp"
#include "hyperherm/matrix.hpp"
#include "hyperherm/scalar.hpp"

namespace hyperherm {

enum class Variance : std::uint8_t { Covariant, Contravariant };

using Index = std::vector<std::size_t>;

/// Dense tensor over a Scalar ring. Every axis has the same length (the
/// dimension of the underlying space) and carries a variance tag. Data is
/// row-major: the last axis varies fastest.
template <Scalar S>
class Tensor {
 public:
  Tensor() : data_(1) {}
  Tensor(std::size_t dim, std::vector<Variance> variance)
      : dim_(dim), variance_(std::move(variance)), data_(flat_size(dim, variance_.size())) {}

  static Tensor covariant(std::size_t dim, std::size_t rank) {
    return Tensor(dim, std::vector<Variance>(rank, Variance::Covariant));
  }
  static Tensor contravariant(std::size_t dim, std::size_t rank) {
    return Tensor(dim, std::vector<Variance>(rank, Variance::Contravariant));
  }
  /// Covariant rank-1 tensor holding the given components.
  static Tensor covector(const std::vector<S>& components) {
    Tensor t = covariant(components.size(), 1);
    std::copy(components.begin(), components.end(), t.data_.begin());
    return t;
  }

  [[nodiscard]] std::size_t dim() const { return dim_; }
  [[nodiscard]] std::size_t rank() const { return variance_.size(); }
  [[nodiscard]] const std::vector<Variance>& variance() const { return variance_; }
  [[nodiscard]] Variance variance(std::size_t axis) const { return variance_.at(axis); }
  [[nodiscard]] std::size_t size() const { return data_.size(); }
  [[nodiscard]] std::span<const S> data() const { return data_; }
  [[nodiscard]] std::span<S> data() { return data_; }

  S& at(std::span<const std::size_t> idx) { return data_[offset(idx)]; }
  const S& at(std::span<const std::size_t> idx) const { return data_[offset(idx)]; }
  S& at(std::initializer_list<std::size_t> idx) { return at(std::span(idx.begin(), idx.size())); }
  const S& at(std::initializer_list<std::size_t> idx) const { return at(std::span(idx.begin(), idx.size())); }

  /// Value of a rank-0 tensor.
  [[nodiscard]] const S& value() const {
    if (rank() != 0) throw DimensionError("Tensor::value: tensor is not rank 0");
    return data_.front();
  }

  [[nodiscard]] Index unflatten(std::size_t flat) const {
    Index idx(rank());
    for (std::size_t a = rank(); a-- > 0;) {
      idx[a] = flat % dim_;
      flat /= dim_;
    }
    return idx;
  }

  [[nodiscard]] bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const S& x) { return x.is_zero(); });
  }

  /// (index, value) pairs of all nonzero components, in row-major order.
  [[nodiscard]] std::vector<std::pair<Index, S>> nonzero_entries() const {
    std::vector<std::pair<Index, S>> out;
    for (std::size_t k = 0; k < data_.size(); ++k)
      if (!data_[k].is_zero()) out.emplace_back(unflatten(k), data_[k]);
    return out;
  }

  /// Applies f to every component, producing a tensor over another ring.
  template <class F>
  [[nodiscard]] auto map(F&& f) const {
    using T = std::decay_t<decltype(f(data_.front()))>;
    Tensor<T> out(dim_, variance_);
    for (std::size_t k = 0; k < data_.size(); ++k) out.data()[k] = f(data_[k]);
    return out;
  }

  Tensor& operator+=(const Tensor& rhs) {
    check_shape(rhs);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
    return *this;
  }
  Tensor& operator-=(const Tensor& rhs) {
    check_shape(rhs);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
    return *this;
  }
  Tensor& operator*=(const S& s) {
    for (auto& x : data_) x = x * s;
    return *this;
  }
  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend Tensor operator*(Tensor a, const S& s) { return a *= s; }
  friend Tensor operator*(const S& s, Tensor a) { return a *= s; }
  Tensor operator-() const {
    Tensor out = *this;
    for (auto& x : out.data_) x = -x;
    return out;
  }

  friend bool operator==(const Tensor&, const Tensor&) = default;

 private:
  static std::size_t flat_size(std::size_t dim, std::size_t rank) {
    std::size_t n = 1;
    for (std::size_t a = 0; a < rank; ++a) n *= dim;
    return n;
  }

  std::size_t offset(std::span<const std::size_t> idx) const {
    if (idx.size() != rank()) throw DimensionError("Tensor: index has wrong number of axes");
    std::size_t flat = 0;
    for (std::size_t i : idx) {
      if (i >= dim_) throw DimensionError("Tensor: index out of range");
      flat = flat * dim_ + i;
    }
    return flat;
  }

  void check_shape(const Tensor& other) const {
    if (other.dim_ != dim_ || other.variance_ != variance_)
      throw DimensionError("Tensor: shape or variance mismatch");
  }

  std::size_t dim_ = 0;
  std::vector<Variance> variance_;
  std::vector<S> data_;
};

/// Calls f(index) for every multi-index of the given rank over 0..dim-1.
template <class F>
void for_each_index(std::size_t dim, std::size_t rank, F&& f) {
  Index idx(rank, 0);
  if (dim == 0 && rank > 0) return;
  while (true) {
    f(static_cast<const Index&>(idx));
    std::size_t a = rank;
    while (a > 0) {
      --a;
      if (++idx[a] < dim) break;
      idx[a] = 0;
      if (a == 0) return;
    }
    if (rank == 0) return;
  }
}

/// Einstein summation of t and u over the given (axis-in-t, axis-in-u) pairs.
/// Remaining axes keep their order, t's first.
template <Scalar S>
Tensor<S> contract(const Tensor<S>& t, const Tensor<S>& u,
                   std::span<const std::pair<std::size_t, std::size_t>> pairs) {
  if (t.dim() != u.dim()) throw DimensionError("contract: tensors live on spaces of different dimension");
  std::vector<bool> t_used(t.rank(), false);
  std::vector<bool> u_used(u.rank(), false);
  for (const auto& [a, b] : pairs) {
    if (a >= t.rank() || b >= u.rank()) throw DimensionError("contract: axis out of range");
    if (t_used[a] || u_used[b]) throw DimensionError("contract: axis paired twice");
    if (t.variance(a) == u.variance(b)) throw VarianceError("contract: paired axes have the same variance");
    t_used[a] = u_used[b] = true;
  }

  std::vector<std::size_t> t_free, u_free;
  std::vector<Variance> out_var;
  for (std::size_t a = 0; a < t.rank(); ++a)
    if (!t_used[a]) {
      t_free.push_back(a);
      out_var.push_back(t.variance(a));
    }
  for (std::size_t b = 0; b < u.rank(); ++b)
    if (!u_used[b]) {
      u_free.push_back(b);
      out_var.push_back(u.variance(b));
    }

  const std::size_t dim = t.dim();
  Tensor<S> out(dim, std::move(out_var));
  Index ti(t.rank()), ui(u.rank());
  for_each_index(dim, out.rank(), [&](const Index& oi) {
    for (std::size_t k = 0; k < t_free.size(); ++k) ti[t_free[k]] = oi[k];
    for (std::size_t k = 0; k < u_free.size(); ++k) ui[u_free[k]] = oi[t_free.size() + k];
    S sum;
    for_each_index(dim, pairs.size(), [&](const Index& si) {
      for (std::size_t p = 0; p < pairs.size(); ++p) {
        ti[pairs[p].first] = si[p];
        ui[pairs[p].second] = si[p];
      }
      const S& a = t.at(ti);
      if (a.is_zero()) return;
      const S& b = u.at(ui);
      if (b.is_zero()) return;
      sum += a * b;
    });
    out.at(oi) = std::move(sum);
  });
  return out;
}

template <Scalar S>
Tensor<S> contract(const Tensor<S>& t, const Tensor<S>& u,
                   std::initializer_list<std::pair<std::size_t, std::size_t>> pairs) {
  return contract(t, u, std::span(pairs.begin(), pairs.size()));
}

/// Rank-2 tensor with the given Gram matrix (covariant) or inverse (contravariant).
template <Scalar S>
Tensor<S> matrix_tensor(const Matrix<S>& m, Variance first, Variance second) {
  Tensor<S> t(m.size(), {first, second});
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) t.at({i, j}) = m(i, j);
  return t;
}

/// Endomorphism as a (1,1)-tensor T^i_j (axis 0 contravariant, axis 1 covariant).
template <Scalar S>
Tensor<S> endomorphism_tensor(const Matrix<S>& m) {
  return matrix_tensor(m, Variance::Contravariant, Variance::Covariant);
}

/// A metric and its exact inverse, both constant in the chosen basis.
template <Scalar S>
struct MetricPair {
  Tensor<S> g;      ///< g_ij
  Tensor<S> g_inv;  ///< g^ij
  Matrix<Rational> gram;
  Matrix<Rational> gram_inv;

  /// Throws PreconditionError if gram is not symmetric or not invertible.
  static MetricPair from_gram(const Matrix<Rational>& gram) {
    if (!gram.is_symmetric()) throw PreconditionError("MetricPair: metric is not symmetric");
    MetricPair m;
    m.gram = gram;
    m.gram_inv = inverse(gram);
    m.g = matrix_tensor(lift_matrix<S>(gram), Variance::Covariant, Variance::Covariant);
    m.g_inv = matrix_tensor(lift_matrix<S>(m.gram_inv), Variance::Contravariant, Variance::Contravariant);
    return m;
  }

  [[nodiscard]] std::size_t dim() const { return gram.size(); }
  [[nodiscard]] S at(std::size_t i, std::size_t j) const { return S(gram(i, j)); }
  [[nodiscard]] S inv_at(std::size_t i, std::size_t j) const { return S(gram_inv(i, j)); }

  /// g(x, y) for component vectors.
  [[nodiscard]] S apply(const std::vector<S>& x, const std::vector<S>& y) const {
    S out;
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = 0; j < dim(); ++j)
        if (!gram(i, j).is_zero() && !x[i].is_zero() && !y[j].is_zero()) out += x[i] * S(gram(i, j)) * y[j];
    return out;
  }
};

namespace detail {

// Applies a (dim x dim) rational matrix to one axis of t and sets its variance.
template <Scalar S>
Tensor<S> transform_axis(const Tensor<S>& t, std::size_t axis, const Matrix<Rational>& m, Variance v) {
  if (axis >= t.rank()) throw DimensionError("index raise/lower: axis out of range");
  if (m.size() != t.dim()) throw DimensionError("index raise/lower: metric dimension mismatch");
  std::vector<Variance> var = t.variance();
  var[axis] = v;
  Tensor<S> out(t.dim(), std::move(var));
  Index src(t.rank());
  for_each_index(t.dim(), t.rank(), [&](const Index& idx) {
    src = idx;
    S sum;
    for (std::size_t b = 0; b < t.dim(); ++b) {
      const Rational& coeff = m(idx[axis], b);
      if (coeff.is_zero()) continue;
      src[axis] = b;
      const S& x = t.at(src);
      if (!x.is_zero()) sum += x * S(coeff);
    }
    out.at(idx) = std::move(sum);
  });
  return out;
}

}  // namespace detail

template <Scalar S>
Tensor<S> raise_index(const Tensor<S>& t, std::size_t axis, const MetricPair<S>& m) {
  if (t.variance(axis) != Variance::Covariant) throw VarianceError("raise_index: axis is not covariant");
  return detail::transform_axis(t, axis, m.gram_inv, Variance::Contravariant);
}

template <Scalar S>
Tensor<S> lower_index(const Tensor<S>& t, std::size_t axis, const MetricPair<S>& m) {
  if (t.variance(axis) != Variance::Contravariant) throw VarianceError("lower_index: axis is not contravariant");
  return detail::transform_axis(t, axis, m.gram, Variance::Covariant);
}

/// Metric square norm: raise every index of t and contract against t itself.
/// For an indefinite metric the result may be zero or negative on nonzero t.
template <Scalar S>
S square_norm(const Tensor<S>& t, const MetricPair<S>& m) {
  for (Variance v : t.variance())
    if (v != Variance::Covariant) throw VarianceError("square_norm: tensor must be fully covariant");
  Tensor<S> raised = t;
  for (std::size_t a = 0; a < t.rank(); ++a) raised = raise_index(raised, a, m);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < t.rank(); ++a) pairs.emplace_back(a, a);
  return contract(raised, t, std::span<const std::pair<std::size_t, std::size_t>>(pairs)).value();
}

}  // namespace hyperherm
