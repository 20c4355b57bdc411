#pragma once

#include "nilpo/rational.hpp"

#include <cassert>
#include <utility>
#include <vector>

namespace nilpo {

template <typename T> class Matrix
{
  public:
	Matrix() : rows_(0), cols_(0) {}
	Matrix(int rows, int cols, T fill = T())
	    : rows_(rows), cols_(cols), data_(size_t(rows) * cols, fill)
	{
	}

	int rows() const { return rows_; }
	int cols() const { return cols_; }

	T &operator()(int r, int c) { return data_[size_t(r) * cols_ + c]; }
	const T &operator()(int r, int c) const
	{
		return data_[size_t(r) * cols_ + c];
	}

	bool operator==(const Matrix &other) const
	{
		return rows_ == other.rows_ && cols_ == other.cols_ &&
		       data_ == other.data_;
	}

	void swap_rows(int a, int b)
	{
		for (int c = 0; c < cols_; ++c)
			std::swap((*this)(a, c), (*this)(b, c));
	}
	void swap_cols(int a, int b)
	{
		for (int r = 0; r < rows_; ++r)
			std::swap((*this)(r, a), (*this)(r, b));
	}

  private:
	int rows_, cols_;
	std::vector<T> data_;
};

inline Matrix<Int> identity_matrix(int n)
{
	Matrix<Int> m(n, n, Int(0));
	for (int i = 0; i < n; ++i)
		m(i, i) = 1;
	return m;
}

inline Matrix<Int> matrix_product(const Matrix<Int> &a, const Matrix<Int> &b)
{
	assert(a.cols() == b.rows());
	Matrix<Int> r(a.rows(), b.cols(), Int(0));
	for (int i = 0; i < a.rows(); ++i)
		for (int k = 0; k < a.cols(); ++k)
		{
			if (a(i, k) == 0)
				continue;
			for (int j = 0; j < b.cols(); ++j)
				r(i, j) += a(i, k) * b(k, j);
		}
	return r;
}

// A = U * D * V with U, V unimodular and the diagonal of D a nonnegative
// divisibility chain d1 | d2 | ...
struct SmithDecomposition
{
	Matrix<Int> U, D, V;

	std::vector<Int> invariant_factors() const
	{
		std::vector<Int> d;
		int n = std::min(D.rows(), D.cols());
		for (int i = 0; i < n; ++i)
			if (D(i, i) != 0)
				d.push_back(D(i, i));
		return d;
	}
};

namespace detail {

// row op M <- E M with E = (add q * row src to row dst) keeps A = U M V by
// U <- U E^{-1}, i.e. U col_src += q * U col_dst.
struct SnfState
{
	Matrix<Int> M, U, V;

	void add_row(int dst, int src, const Int &q) // row dst += q * row src
	{
		for (int c = 0; c < M.cols(); ++c)
			M(dst, c) += q * M(src, c);
		for (int r = 0; r < U.rows(); ++r)
			U(r, src) -= q * U(r, dst);
	}
	void add_col(int dst, int src, const Int &q) // col dst += q * col src
	{
		for (int r = 0; r < M.rows(); ++r)
			M(r, dst) += q * M(r, src);
		for (int c = 0; c < V.cols(); ++c)
			V(src, c) -= q * V(dst, c);
	}
	void swap_rows(int a, int b)
	{
		M.swap_rows(a, b);
		U.swap_cols(a, b);
	}
	void swap_cols(int a, int b)
	{
		M.swap_cols(a, b);
		V.swap_rows(a, b);
	}
	void negate_row(int r)
	{
		for (int c = 0; c < M.cols(); ++c)
			M(r, c) = -M(r, c);
		for (int i = 0; i < U.rows(); ++i)
			U(i, r) = -U(i, r);
	}
};

} // namespace detail

namespace detail {

// quotient rounded to nearest, so remainders satisfy |r| <= |b| / 2
inline Int round_div(const Int &a, const Int &b)
{
	Int q = a / b;
	Int r = a - q * b;
	if (2 * int_abs(r) > int_abs(b))
		q += ((r < 0) == (b < 0)) ? 1 : -1;
	return q;
}

} // namespace detail

// Elementary-operation SNF with least-absolute-value pivoting; the pivot is
// re-selected globally after every reduction pass, which keeps entries small
// at the matrix sizes that arise from presentations.
inline SmithDecomposition smith_normal_form(const Matrix<Int> &A)
{
	detail::SnfState st{A, identity_matrix(A.rows()), identity_matrix(A.cols())};
	Matrix<Int> &M = st.M;
	int s = M.rows(), m = M.cols();
	int n = std::min(s, m);

	for (int k = 0; k < n; ++k)
	{
		for (;;)
		{
			// least |value| in the trailing block
			int pi = -1, pj = -1;
			for (int i = k; i < s; ++i)
				for (int j = k; j < m; ++j)
					if (M(i, j) != 0 &&
					    (pi < 0 || int_abs(M(i, j)) < int_abs(M(pi, pj))))
					{
						pi = i;
						pj = j;
					}
			if (pi < 0)
			{
				k = n; // trailing block is zero, done
				break;
			}
			st.swap_rows(k, pi);
			st.swap_cols(k, pj);

			bool remainder = false;
			for (int i = k + 1; i < s; ++i)
				if (M(i, k) != 0)
				{
					st.add_row(i, k, -detail::round_div(M(i, k), M(k, k)));
					if (M(i, k) != 0)
						remainder = true;
				}
			for (int j = k + 1; j < m; ++j)
				if (M(k, j) != 0)
				{
					st.add_col(j, k, -detail::round_div(M(k, j), M(k, k)));
					if (M(k, j) != 0)
						remainder = true;
				}
			if (remainder)
				continue; // smaller entries exist now, re-select the pivot

			// enforce d_k | (trailing block) before moving on
			bool divides = true;
			for (int i = k + 1; i < s && divides; ++i)
				for (int j = k + 1; j < m && divides; ++j)
					if (M(i, j) % M(k, k) != 0)
					{
						st.add_row(k, i, Int(1));
						divides = false;
					}
			if (divides)
				break;
		}
		if (k >= n)
			break;
		if (M(k, k) < 0)
			st.negate_row(k);
	}

	return SmithDecomposition{st.U, st.M, st.V};
}

template <typename F> struct RankKernel
{
	int rank = 0;
	// vectors v with A v = 0, one per non-pivot column
	std::vector<std::vector<typename F::Elem>> kernel;
};

// Gaussian elimination over an exact field.
template <typename F>
RankKernel<F> rank_kernel(const F &field, Matrix<typename F::Elem> A)
{
	using Elem = typename F::Elem;
	int rows = A.rows(), cols = A.cols();
	std::vector<int> pivot_col;
	int r = 0;
	for (int c = 0; c < cols && r < rows; ++c)
	{
		int pr = -1;
		for (int i = r; i < rows; ++i)
			if (!field.is_zero(A(i, c)))
			{
				pr = i;
				break;
			}
		if (pr < 0)
			continue;
		A.swap_rows(r, pr);
		Elem inv = field.inv(A(r, c));
		for (int j = c; j < cols; ++j)
			A(r, j) = field.mul(A(r, j), inv);
		for (int i = 0; i < rows; ++i)
		{
			if (i == r || field.is_zero(A(i, c)))
				continue;
			Elem f = A(i, c);
			for (int j = c; j < cols; ++j)
				A(i, j) = field.sub(A(i, j), field.mul(f, A(r, j)));
		}
		pivot_col.push_back(c);
		++r;
	}

	RankKernel<F> out;
	out.rank = r;
	std::vector<bool> is_pivot(cols, false);
	for (int c : pivot_col)
		is_pivot[c] = true;
	for (int fc = 0; fc < cols; ++fc)
	{
		if (is_pivot[fc])
			continue;
		std::vector<Elem> v(cols, field.zero());
		v[fc] = field.one();
		for (size_t pr = 0; pr < pivot_col.size(); ++pr)
			v[pivot_col[pr]] = field.neg(A(int(pr), fc));
		out.kernel.push_back(std::move(v));
	}
	return out;
}

// Fraction-free (Bareiss) rank of an integer matrix; independent of the
// field-based elimination path.
inline int bareiss_rank(Matrix<Int> A)
{
	int rows = A.rows(), cols = A.cols();
	Int prev = 1;
	int r = 0;
	for (int c = 0; c < cols && r < rows; ++c)
	{
		int pr = -1;
		for (int i = r; i < rows; ++i)
			if (A(i, c) != 0)
			{
				pr = i;
				break;
			}
		if (pr < 0)
			continue;
		A.swap_rows(r, pr);
		for (int i = r + 1; i < rows; ++i)
		{
			for (int j = c + 1; j < cols; ++j)
				A(i, j) = (A(r, c) * A(i, j) - A(i, c) * A(r, j)) / prev;
			A(i, c) = 0;
		}
		prev = A(r, c);
		++r;
	}
	return r;
}

inline Int integer_determinant(Matrix<Int> A)
{
	assert(A.rows() == A.cols());
	int n = A.rows();
	Int prev = 1;
	int sign = 1;
	for (int k = 0; k < n; ++k)
	{
		int pr = -1;
		for (int i = k; i < n; ++i)
			if (A(i, k) != 0)
			{
				pr = i;
				break;
			}
		if (pr < 0)
			return 0;
		if (pr != k)
		{
			A.swap_rows(k, pr);
			sign = -sign;
		}
		for (int i = k + 1; i < n; ++i)
		{
			for (int j = k + 1; j < n; ++j)
				A(i, j) = (A(k, k) * A(i, j) - A(i, k) * A(k, j)) / prev;
			A(i, k) = 0;
		}
		prev = A(k, k);
	}
	return sign > 0 ? A(n - 1, n - 1) : Int(-A(n - 1, n - 1));
}

} // namespace nilpo
