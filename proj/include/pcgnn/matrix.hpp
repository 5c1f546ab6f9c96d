#pragma once

#include <cmath>
#include <cstring>
#include <vector>

#include "pcgnn/common.hpp"
#include "pcgnn/mem_counter.hpp"
#include "pcgnn/parallel.hpp"

namespace pcgnn {

/// std allocator that reports element counts to the active TransientScope.
template <typename T>
struct CountingAllocator {
  using value_type = T;
  CountingAllocator() = default;
  template <typename U>
  CountingAllocator(const CountingAllocator<U>&) {}

  T* allocate(std::size_t n) {
    count_alloc(n);
    return static_cast<T*>(::operator new(n * sizeof(T)));
  }
  void deallocate(T* p, std::size_t n) {
    count_free(n);
    ::operator delete(p);
  }
  bool operator==(const CountingAllocator&) const { return true; }
  bool operator!=(const CountingAllocator&) const { return false; }
};

/// Dense row-major 2-D array. T is double for everything trainable and float
/// for the benchmark kernels.
template <typename T>
class MatT {
 public:
  MatT() = default;
  MatT(index_t rows, index_t cols)
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols), T(0)) {
    check(rows >= 0 && cols >= 0, "matrix dims must be non-negative");
  }

  static MatT full(index_t rows, index_t cols, T v) {
    MatT m(rows, cols);
    for (auto& x : m.data_) x = v;
    return m;
  }
  static MatT identity(index_t n) {
    MatT m(n, n);
    for (index_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  index_t rows() const { return rows_; }
  index_t cols() const { return cols_; }
  index_t size() const { return rows_ * cols_; }
  bool empty() const { return data_.empty(); }

  T& operator()(index_t i, index_t j) { return data_[static_cast<std::size_t>(i * cols_ + j)]; }
  T operator()(index_t i, index_t j) const {
    return data_[static_cast<std::size_t>(i * cols_ + j)];
  }
  T* row(index_t i) { return data_.data() + i * cols_; }
  const T* row(index_t i) const { return data_.data() + i * cols_; }
  T* data() { return data_.data(); }
  const T* data() const { return data_.data(); }

  void fill(T v) {
    for (auto& x : data_) x = v;
  }

  bool all_finite() const {
    for (T x : data_)
      if (!std::isfinite(static_cast<double>(x))) return false;
    return true;
  }

  bool same_shape(const MatT& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }

  bool operator==(const MatT& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ &&
           std::memcmp(data_.data(), o.data_.data(),
                       data_.size() * sizeof(T)) == 0;
  }

  MatT transposed() const {
    MatT t(cols_, rows_);
    for (index_t i = 0; i < rows_; ++i)
      for (index_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  template <typename U>
  MatT<U> cast() const {
    MatT<U> out(rows_, cols_);
    for (index_t i = 0; i < size(); ++i) out.data()[i] = static_cast<U>(data_[static_cast<std::size_t>(i)]);
    return out;
  }

 private:
  index_t rows_ = 0;
  index_t cols_ = 0;
  std::vector<T, CountingAllocator<T>> data_;
};

using Matrix = MatT<double>;
using MatrixF = MatT<float>;

// ---------------------------------------------------------------------------
// GEMM. Broadcast-saxpy order (i, k, j) with the j loop vectorized, so the
// accumulation order of every output element is fixed by K alone. A given row
// of A therefore maps to bit-identical output regardless of how many other
// rows the call carries or how many workers split the row range. Layer path
// equivalences and permutation invariance rely on this.
// ---------------------------------------------------------------------------

/// C(M,N) = A(M,K) * B(K,N)
template <typename T>
void gemm_nn(const MatT<T>& a, const MatT<T>& b, MatT<T>& c) {
  const index_t m = a.rows(), k = a.cols(), n = b.cols();
  check(b.rows() == k, "gemm_nn: inner dimension mismatch");
  check(c.rows() == m && c.cols() == n, "gemm_nn: output shape mismatch");
  parallel_for(0, m, [&](index_t lo, index_t hi) {
    for (index_t i = lo; i < hi; ++i) {
      T* cr = c.row(i);
      const T* ar = a.row(i);
      for (index_t j = 0; j < n; ++j) cr[j] = T(0);
      index_t kk = 0;
      for (; kk + 4 <= k; kk += 4) {
        const T a0 = ar[kk], a1 = ar[kk + 1], a2 = ar[kk + 2], a3 = ar[kk + 3];
        const T* b0 = b.row(kk);
        const T* b1 = b.row(kk + 1);
        const T* b2 = b.row(kk + 2);
        const T* b3 = b.row(kk + 3);
        for (index_t j = 0; j < n; ++j)
          cr[j] += a0 * b0[j] + a1 * b1[j] + a2 * b2[j] + a3 * b3[j];
      }
      for (; kk < k; ++kk) {
        const T ak = ar[kk];
        const T* br = b.row(kk);
        for (index_t j = 0; j < n; ++j) cr[j] += ak * br[j];
      }
    }
  });
}

/// C(K,N) += A(M,K)^T * G(M,N). Accumulates (used for weight gradients).
template <typename T>
void gemm_tn_acc(const MatT<T>& a, const MatT<T>& g, MatT<T>& c) {
  const index_t m = a.rows(), k = a.cols(), n = g.cols();
  check(g.rows() == m, "gemm_tn_acc: row mismatch");
  check(c.rows() == k && c.cols() == n, "gemm_tn_acc: output shape mismatch");
  parallel_for(0, k, [&](index_t klo, index_t khi) {
    for (index_t i = 0; i < m; ++i) {
      const T* ar = a.row(i);
      const T* gr = g.row(i);
      for (index_t kk = klo; kk < khi; ++kk) {
        const T aik = ar[kk];
        T* cr = c.row(kk);
        for (index_t j = 0; j < n; ++j) cr[j] += aik * gr[j];
      }
    }
  });
}

/// C(M,K) += G(M,N) * B(K,N)^T. Accumulates (used for input gradients,
/// with B the forward weight).
template <typename T>
void gemm_nt_acc(const MatT<T>& g, const MatT<T>& b, MatT<T>& c) {
  const index_t m = g.rows(), n = g.cols(), k = b.rows();
  check(b.cols() == n, "gemm_nt_acc: column mismatch");
  check(c.rows() == m && c.cols() == k, "gemm_nt_acc: output shape mismatch");
  parallel_for(0, m, [&](index_t lo, index_t hi) {
    for (index_t i = lo; i < hi; ++i) {
      const T* gr = g.row(i);
      T* cr = c.row(i);
      for (index_t kk = 0; kk < k; ++kk) {
        const T* br = b.row(kk);
        T acc = T(0);
        for (index_t j = 0; j < n; ++j) acc += gr[j] * br[j];
        cr[kk] += acc;
      }
    }
  });
}

}  // namespace pcgnn
