#include "cy3/matfp.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "cy3/fields.hpp"

namespace cy3 {

MatFp::MatFp(int rows, int cols, int modulus)
    : rows_(rows), cols_(cols), mod_(modulus), a_((size_t)rows * cols, 0) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("MatFp: negative dimension");
    if (modulus < 2 || modulus > 251) throw std::invalid_argument("MatFp: modulus out of range");
}

MatFp MatFp::identity(int n, int modulus) {
    MatFp m(n, n, modulus);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

void MatFp::set(int i, int j, int v) {
    a_[(size_t)i * cols_ + j] = (uint8_t)(((v % mod_) + mod_) % mod_);
}

MatFp MatFp::operator+(const MatFp& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || mod_ != o.mod_)
        throw std::invalid_argument("MatFp::+: shape or modulus mismatch");
    MatFp r(rows_, cols_, mod_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = (uint8_t)((a_[i] + o.a_[i]) % mod_);
    return r;
}

MatFp MatFp::operator-(const MatFp& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || mod_ != o.mod_)
        throw std::invalid_argument("MatFp::-: shape or modulus mismatch");
    MatFp r(rows_, cols_, mod_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = (uint8_t)((a_[i] + mod_ - o.a_[i]) % mod_);
    return r;
}

MatFp MatFp::operator*(const MatFp& o) const {
    if (mod_ != o.mod_) throw std::invalid_argument("MatFp::*: modulus mismatch");
    if (cols_ != o.rows_) throw std::invalid_argument("MatFp::*: shape mismatch");
    MatFp r(rows_, o.cols_, mod_);
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            int aik = at(i, k);
            if (!aik) continue;
            const uint8_t* brow = o.row(k);
            uint8_t* rrow = r.row(i);
            for (int j = 0; j < o.cols_; ++j)
                rrow[j] = (uint8_t)((rrow[j] + aik * brow[j]) % mod_);
        }
    }
    return r;
}

MatFp MatFp::scaled(int c) const {
    c = ((c % mod_) + mod_) % mod_;
    MatFp r(rows_, cols_, mod_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = (uint8_t)(a_[i] * c % mod_);
    return r;
}

MatFp MatFp::transposed() const {
    MatFp r(cols_, rows_, mod_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.a_[(size_t)j * rows_ + i] = at(i, j);
    return r;
}

bool MatFp::operator==(const MatFp& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && mod_ == o.mod_ && a_ == o.a_;
}

bool MatFp::is_zero() const {
    for (uint8_t v : a_)
        if (v) return false;
    return true;
}

MatFp MatFp::vstack(const MatFp& a, const MatFp& b) {
    if (a.cols_ != b.cols_ || a.mod_ != b.mod_)
        throw std::invalid_argument("MatFp::vstack: shape or modulus mismatch");
    MatFp r(a.rows_ + b.rows_, a.cols_, a.mod_);
    std::copy(a.a_.begin(), a.a_.end(), r.a_.begin());
    std::copy(b.a_.begin(), b.a_.end(), r.a_.begin() + a.a_.size());
    return r;
}

MatFp MatFp::hstack(const MatFp& a, const MatFp& b) {
    if (a.rows_ != b.rows_ || a.mod_ != b.mod_)
        throw std::invalid_argument("MatFp::hstack: shape or modulus mismatch");
    MatFp r(a.rows_, a.cols_ + b.cols_, a.mod_);
    for (int i = 0; i < a.rows_; ++i) {
        std::copy(a.row(i), a.row(i) + a.cols_, r.row(i));
        std::copy(b.row(i), b.row(i) + b.cols_, r.row(i) + a.cols_);
    }
    return r;
}

namespace {

void require_prime(int m, const char* who) {
    if (!is_prime(m)) throw std::invalid_argument(std::string(who) + ": modulus must be prime");
}

int inv_mod(int a, int p) {
    int r = 1;
    long long b = a, e = p - 2;
    while (e) {
        if (e & 1) r = (int)(r * b % p);
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

}  // namespace

RrefResult rref(const MatFp& m) {
    require_prime(m.modulus(), "rref");
    const int p = m.modulus(), rows = m.rows(), cols = m.cols();
    MatFp r = m;
    std::vector<int> pivots;
    // a + f*b stays below 256 for p <= 15, so one table lookup reduces it
    uint8_t red[256];
    const bool small = p <= 15;
    if (small)
        for (int v = 0; v < 256; ++v) red[v] = (uint8_t)(v % p);
    int cur = 0;
    for (int col = 0; col < cols && cur < rows; ++col) {
        int piv = -1;
        for (int i = cur; i < rows; ++i)
            if (r.at(i, col)) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != cur)
            for (int j = 0; j < cols; ++j) {
                uint8_t t = r.at(cur, j);
                r.set(cur, j, r.at(piv, j));
                r.set(piv, j, t);
            }
        int s = inv_mod(r.at(cur, col), p);
        if (s != 1) {
            uint8_t* rw = r.row(cur);
            for (int j = col; j < cols; ++j) rw[j] = (uint8_t)(rw[j] * s % p);
        }
        const uint8_t* prow = r.row(cur);
        for (int i = 0; i < rows; ++i) {
            if (i == cur) continue;
            int f = r.at(i, col);
            if (!f) continue;
            int g = p - f;
            uint8_t* rw = r.row(i);
            if (small) {
                for (int j = col; j < cols; ++j) rw[j] = red[rw[j] + g * prow[j]];
            } else {
                for (int j = col; j < cols; ++j) rw[j] = (uint8_t)((rw[j] + g * prow[j]) % p);
            }
        }
        pivots.push_back(col);
        ++cur;
    }
    return {std::move(r), (int)pivots.size(), std::move(pivots)};
}

int rank_of(const MatFp& m) { return rref(m).rank; }

MatFp kernel_basis(const MatFp& m) {
    RrefResult rr = rref(m);
    const int p = m.modulus(), cols = m.cols();
    std::vector<bool> is_piv(cols, false);
    for (int c : rr.pivots) is_piv[c] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < cols; ++c)
        if (!is_piv[c]) free_cols.push_back(c);
    MatFp k((int)free_cols.size(), cols, p);
    for (int bi = 0; bi < (int)free_cols.size(); ++bi) {
        int f = free_cols[bi];
        k.set(bi, f, 1);
        for (int i = 0; i < rr.rank; ++i) k.set(bi, rr.pivots[i], p - rr.r.at(i, f));
    }
    return k;
}

MatFp row_space_canonical(const MatFp& m) {
    RrefResult rr = rref(m);
    MatFp out(rr.rank, m.cols(), m.modulus());
    for (int i = 0; i < rr.rank; ++i)
        std::copy(rr.r.row(i), rr.r.row(i) + m.cols(), out.row(i));
    return out;
}

bool in_row_space(const MatFp& basis, const MatFp& v) {
    int r0 = rank_of(basis);
    return rank_of(MatFp::vstack(basis, v)) == r0;
}

MatFp kron(const MatFp& a, const MatFp& b) {
    if (a.modulus() != b.modulus()) throw std::invalid_argument("kron: modulus mismatch");
    const int m = a.modulus();
    MatFp r(a.rows() * b.rows(), a.cols() * b.cols(), m);
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            int v = a.at(i, j);
            if (!v) continue;
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l)
                    r.set(i * b.rows() + k, j * b.cols() + l, v * b.at(k, l));
        }
    return r;
}

void write_matrix(std::ostream& os, const MatFp& m) {
    os << m.rows() << ' ' << m.cols() << ' ' << m.modulus() << '\n';
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (j) os << ' ';
            os << (int)m.at(i, j);
        }
        os << '\n';
    }
}

MatFp read_matrix(std::istream& is) {
    int rows, cols, mod;
    if (!(is >> rows >> cols >> mod)) throw std::invalid_argument("read_matrix: bad header");
    MatFp m(rows, cols, mod);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            int v;
            if (!(is >> v)) throw std::invalid_argument("read_matrix: truncated data");
            m.set(i, j, v);
        }
    return m;
}

}  // namespace cy3
