#include "dp1/lattice.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dp1 {

namespace {

using RatMatrix = std::vector<std::vector<mpq_class>>;

Int to_int(const mpz_class& z) {
    if (!z.fits_slong_p()) throw std::overflow_error("integer does not fit in 64 bits");
    return static_cast<Int>(z.get_si());
}

bool is_symmetric(const IntMatrix& m) {
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i].size() != m.size()) return false;
        for (std::size_t j = 0; j < i; ++j)
            if (m[i][j] != m[j][i]) return false;
    }
    return true;
}

// Q(x) = sum_i q[i][i] * (x_i + sum_{j>i} q[i][j] x_j)^2  (Cohen, Alg. 2.7.6).
// Returns false if some pivot is <= 0.
bool square_completion(const IntMatrix& g, RatMatrix& q) {
    const std::size_t n = g.size();
    q.assign(n, std::vector<mpq_class>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) q[i][j] = g[i][j];
    for (std::size_t i = 0; i < n; ++i) {
        if (sgn(q[i][i]) <= 0) return false;
        for (std::size_t j = i + 1; j < n; ++j) {
            q[j][i] = q[i][j];
            q[i][j] /= q[i][i];
        }
        for (std::size_t k = i + 1; k < n; ++k)
            for (std::size_t l = k; l < n; ++l) q[k][l] -= q[k][i] * q[i][l];
    }
    return true;
}

// Exact determinant and inverse of a nonsingular rational matrix by
// Gauss-Jordan; returns false when singular.
bool invert(RatMatrix a, RatMatrix& inv, mpq_class& det) {
    const std::size_t n = a.size();
    inv.assign(n, std::vector<mpq_class>(n));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && sgn(a[p][c]) == 0) ++p;
        if (p == n) return false;
        if (p != c) {
            std::swap(a[p], a[c]);
            std::swap(inv[p], inv[c]);
            det = -det;
        }
        mpq_class piv = a[c][c];
        det *= piv;
        for (std::size_t j = 0; j < n; ++j) {
            a[c][j] /= piv;
            inv[c][j] /= piv;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || sgn(a[r][c]) == 0) continue;
            mpq_class f = a[r][c];
            for (std::size_t j = 0; j < n; ++j) {
                a[r][j] -= f * a[c][j];
                inv[r][j] -= f * inv[c][j];
            }
        }
    }
    return true;
}

mpz_class floor_q(const mpq_class& x) {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return r;
}

class Enumerator {
public:
    Enumerator(const RatMatrix& q, Int target, const EnumOptions& opts)
        : q_(q), n_(q.size()), target_(target), limit_(opts.node_limit), x_(n_, 0) {}

    std::vector<std::vector<Int>> run() {
        if (n_ > 0) descend(n_ - 1, mpq_class(target_));
        std::sort(out_.begin(), out_.end());
        return std::move(out_);
    }

private:
    void descend(std::size_t i, const mpq_class& budget) {
        mpq_class c = 0;
        for (std::size_t j = i + 1; j < n_; ++j) c -= q_[i][j] * x_[j];
        // (x - c)^2 * q_ii <= budget
        const mpq_class bound = budget / q_[i][i];
        const mpz_class start = floor_q(c);
        for (mpz_class x = start;; --x) {
            if (!visit(i, x, c, budget, bound)) break;
        }
        for (mpz_class x = start + 1;; ++x) {
            if (!visit(i, x, c, budget, bound)) break;
        }
    }

    bool visit(std::size_t i, const mpz_class& x, const mpq_class& c, const mpq_class& budget,
               const mpq_class& bound) {
        mpq_class d = mpq_class(x) - c;
        mpq_class d2 = d * d;
        if (d2 > bound) return false;
        if (limit_ && ++nodes_ > *limit_)
            throw std::runtime_error("enumeration node limit exceeded (" + std::string(kEnumNodeLimitEnv) + ")");
        x_[i] = to_int(x);
        mpq_class rest = budget - q_[i][i] * d2;
        if (i == 0) {
            if (sgn(rest) == 0) out_.push_back(x_);
        } else {
            descend(i - 1, rest);
        }
        x_[i] = 0;
        return true;
    }

    const RatMatrix& q_;
    std::size_t n_;
    Int target_;
    std::optional<std::uint64_t> limit_;
    std::uint64_t nodes_ = 0;
    std::vector<Int> x_;
    std::vector<std::vector<Int>> out_;
};

}  // namespace

PicClass PicClass::exceptional(int i) {
    if (i < 1 || i > 8) throw std::invalid_argument("exceptional index must be in 1..8");
    PicClass p;
    p[static_cast<std::size_t>(i)] = 1;
    return p;
}

bool PicClass::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](Int c) { return c == 0; });
}

PicClass& PicClass::operator+=(const PicClass& o) {
    for (std::size_t i = 0; i < kSize; ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

PicClass& PicClass::operator-=(const PicClass& o) {
    for (std::size_t i = 0; i < kSize; ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

PicClass& PicClass::operator*=(Int s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
}

std::string PicClass::to_string() const {
    std::ostringstream os;
    os << '(' << coeffs_[0] << ';';
    for (std::size_t i = 1; i < kSize; ++i) os << (i == 1 ? " " : ",") << coeffs_[i];
    os << ')';
    return os.str();
}

Int intersect(const PicClass& a, const PicClass& b) {
    Int s = a[0] * b[0];
    for (std::size_t i = 1; i < PicClass::kSize; ++i) s -= a[i] * b[i];
    return s;
}

Int degree(const PicClass& a) { return -intersect(a, PicClass::canonical()); }

PicClass reflect(const PicClass& a, const PicClass& e) {
    if (square(e) != -2) throw std::invalid_argument("reflect: mirror must have square -2, got " + e.to_string());
    return a + intersect(a, e) * e;
}

Sublattice::Sublattice(std::vector<PicClass> basis) : basis_(std::move(basis)) {
    const PicClass k = PicClass::canonical();
    for (const auto& b : basis_)
        if (intersect(b, k) != 0) throw std::invalid_argument("sublattice vector not in K-perp: " + b.to_string());
    const std::size_t n = basis_.size();
    gram_.assign(n, std::vector<Int>(n));
    RatMatrix neg(n, std::vector<mpq_class>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            gram_[i][j] = intersect(basis_[i], basis_[j]);
            neg[i][j] = -gram_[i][j];
        }
    RatMatrix inv;
    mpq_class det;
    if (!invert(neg, inv, det)) throw std::invalid_argument("sublattice basis is linearly dependent");
    // K-perp is negative definite, so -gram is positive definite here.
    det_ = to_int(det.get_num());
    adjugate_.assign(n, std::vector<Int>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            mpq_class v = inv[i][j] * det;
            adjugate_[i][j] = to_int(v.get_num());
        }
}

PicClass Sublattice::combine(std::span<const Int> coords) const {
    if (coords.size() != basis_.size()) throw std::invalid_argument("coordinate count does not match rank");
    PicClass out;
    for (std::size_t i = 0; i < coords.size(); ++i) out += coords[i] * basis_[i];
    return out;
}

std::optional<std::vector<Int>> Sublattice::coordinates_of(const PicClass& x) const {
    const std::size_t n = basis_.size();
    std::vector<Int> rhs(n);
    for (std::size_t i = 0; i < n; ++i) rhs[i] = intersect(basis_[i], x);
    // y = gram^{-1} rhs = -(adj / det) rhs
    std::vector<Int> y(n);
    for (std::size_t i = 0; i < n; ++i) {
        Int s = 0;
        for (std::size_t j = 0; j < n; ++j) s += adjugate_[i][j] * rhs[j];
        if (s % det_ != 0) return std::nullopt;
        y[i] = -s / det_;
    }
    if (combine(y) != x) return std::nullopt;
    return y;
}

std::vector<PicClass> k_perp_basis() {
    std::vector<PicClass> out;
    out.push_back(PicClass({1, -1, -1, -1, 0, 0, 0, 0, 0}));
    for (int i = 1; i <= 7; ++i) out.push_back(PicClass::exceptional(i) - PicClass::exceptional(i + 1));
    return out;
}

const Sublattice& k_perp() {
    static const Sublattice lattice(k_perp_basis());
    return lattice;
}

EnumOptions EnumOptions::from_environment() {
    EnumOptions o;
    if (const char* s = std::getenv(kEnumNodeLimitEnv); s && *s) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(s, &end, 10);
        if (end && *end == '\0') o.node_limit = v;
    }
    return o;
}

bool is_positive_definite(const IntMatrix& m) {
    if (!is_symmetric(m)) return false;
    RatMatrix q;
    return square_completion(m, q);
}

std::vector<std::vector<Int>> enumerate_form_values(const IntMatrix& positive_gram, Int target,
                                                    const EnumOptions& options) {
    if (target <= 0) throw std::invalid_argument("target value must be positive");
    if (!is_symmetric(positive_gram)) throw std::invalid_argument("Gram matrix is not symmetric");
    RatMatrix q;
    if (!square_completion(positive_gram, q)) throw std::invalid_argument("Gram matrix is not positive definite");
    return Enumerator(q, target, options).run();
}

std::vector<PicClass> enumerate_vectors(const Sublattice& lattice, Int norm, const EnumOptions& options) {
    if (norm >= 0) throw std::invalid_argument("norm must be negative");
    IntMatrix g = lattice.gram();
    for (auto& row : g)
        for (auto& v : row) v = -v;
    std::vector<PicClass> out;
    for (const auto& y : enumerate_form_values(g, -norm, options)) out.push_back(lattice.combine(y));
    return out;
}

std::vector<std::vector<Int>> integer_kernel(const IntMatrix& m, std::size_t columns) {
    // Unimodular column operations bring m to column echelon form; the
    // transformed unit vectors of the zero columns span the kernel.
    const std::size_t rows = m.size();
    std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(columns));
    for (std::size_t i = 0; i < rows; ++i) {
        if (m[i].size() != columns) throw std::invalid_argument("ragged matrix");
        for (std::size_t j = 0; j < columns; ++j) a[i][j] = m[i][j];
    }
    std::vector<std::vector<mpz_class>> u(columns, std::vector<mpz_class>(columns));
    for (std::size_t j = 0; j < columns; ++j) u[j][j] = 1;  // u[col] is the column vector

    auto col_op = [&](std::size_t dst, std::size_t src, const mpz_class& f) {  // col dst -= f * col src
        for (std::size_t i = 0; i < rows; ++i) a[i][dst] -= f * a[i][src];
        for (std::size_t k = 0; k < columns; ++k) u[dst][k] -= f * u[src][k];
    };
    auto col_swap = [&](std::size_t x, std::size_t y) {
        for (std::size_t i = 0; i < rows; ++i) std::swap(a[i][x], a[i][y]);
        std::swap(u[x], u[y]);
    };

    std::size_t pivot = 0;
    for (std::size_t i = 0; i < rows && pivot < columns; ++i) {
        for (;;) {
            std::size_t best = columns;
            for (std::size_t j = pivot; j < columns; ++j)
                if (sgn(a[i][j]) != 0 && (best == columns || abs(a[i][j]) < abs(a[i][best]))) best = j;
            if (best == columns) break;
            col_swap(pivot, best);
            bool done = true;
            for (std::size_t j = pivot + 1; j < columns; ++j) {
                if (sgn(a[i][j]) == 0) continue;
                mpz_class f;
                mpz_fdiv_q(f.get_mpz_t(), a[i][j].get_mpz_t(), a[i][pivot].get_mpz_t());
                col_op(j, pivot, f);
                if (sgn(a[i][j]) != 0) done = false;
            }
            if (done) {
                ++pivot;
                break;
            }
        }
    }
    std::vector<std::vector<Int>> out;
    for (std::size_t j = pivot; j < columns; ++j) {
        std::vector<Int> v(columns);
        for (std::size_t k = 0; k < columns; ++k) v[k] = to_int(u[j][k]);
        out.push_back(std::move(v));
    }
    return out;
}

Sublattice lll_reduce(const Sublattice& lattice) {
    std::vector<PicClass> b = lattice.basis();
    const std::size_t n = b.size();
    if (n < 2) return lattice;
    auto ip = [](const PicClass& x, const PicClass& y) { return mpq_class(-intersect(x, y)); };
    RatMatrix mu(n, std::vector<mpq_class>(n));
    std::vector<mpq_class> bstar(n);
    auto gram_schmidt = [&] {
        for (std::size_t i = 0; i < n; ++i) {
            bstar[i] = ip(b[i], b[i]);
            for (std::size_t j = 0; j < i; ++j) {
                mpq_class s = ip(b[i], b[j]);
                for (std::size_t k = 0; k < j; ++k) s -= mu[j][k] * mu[i][k] * bstar[k];
                mu[i][j] = s / bstar[j];
                bstar[i] -= mu[i][j] * mu[i][j] * bstar[j];
            }
        }
    };
    const mpq_class delta(3, 4);
    gram_schmidt();
    std::size_t k = 1;
    while (k < n) {
        for (std::size_t jj = k; jj-- > 0;) {
            mpq_class m = mu[k][jj];
            // nearest integer, ties rounded down
            mpz_class r = floor_q(m + mpq_class(1, 2));
            if (sgn(r) != 0) {
                b[k] -= to_int(r) * b[jj];
                gram_schmidt();
            }
        }
        if (bstar[k] >= (delta - mu[k][k - 1] * mu[k][k - 1]) * bstar[k - 1]) {
            ++k;
        } else {
            std::swap(b[k], b[k - 1]);
            gram_schmidt();
            k = std::max<std::size_t>(k - 1, 1);
        }
    }
    return Sublattice(std::move(b));
}

}  // namespace dp1
