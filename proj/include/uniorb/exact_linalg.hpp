#pragma once

// Exact integer/rational linear algebra: Smith normal form, unimodular
// inverses, rational rank, bounded nonnegative integer solutions and
// lattice points of rational polyhedra (Fourier-Motzkin).

#include "uniorb/error.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace uniorb {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using IntVec = std::vector<BigInt>;

inline IntVec make_vec(std::initializer_list<long long> values) {
    IntVec out;
    out.reserve(values.size());
    for (long long v : values)
        out.emplace_back(v);
    return out;
}

inline BigInt dot(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size())
        throw Error(ErrorKind::InvalidInput, "dot: dimension mismatch");
    BigInt sum = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        sum += a[i] * b[i];
    return sum;
}

inline bool is_zero(const IntVec& v) {
    return std::all_of(v.begin(), v.end(), [](const BigInt& x) { return x == 0; });
}

inline IntVec negated(IntVec v) {
    for (auto& x : v)
        x = -x;
    return v;
}

inline BigInt gcd_of(const IntVec& v) {
    BigInt g = 0;
    for (const auto& x : v)
        g = boost::multiprecision::gcd(g, x);
    return boost::multiprecision::abs(g);
}

inline std::string to_string(const IntVec& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? "," : "") << v[i];
    os << ')';
    return os.str();
}

inline BigInt floor_of(const Rational& q) {
    BigInt n = boost::multiprecision::numerator(q);
    BigInt d = boost::multiprecision::denominator(q);
    BigInt r = n / d;
    if (r * d != n && n < 0)
        r -= 1;
    return r;
}

inline BigInt ceil_of(const Rational& q) {
    return -floor_of(-q);
}

/// Dense row-major matrix of arbitrary-precision integers.
class IntMat {
  public:
    IntMat() = default;
    IntMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntMat identity(std::size_t n) {
        IntMat m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    /// Every row must have length `cols`; `cols` is required so that an
    /// empty row list still has a shape.
    static IntMat from_rows(const std::vector<IntVec>& rows, std::size_t cols) {
        IntMat m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols)
                throw Error(ErrorKind::InvalidInput, "matrix rows have inconsistent length");
            for (std::size_t j = 0; j < cols; ++j)
                m(i, j) = rows[i][j];
        }
        return m;
    }

    static IntMat from_rows(const std::vector<IntVec>& rows) {
        return from_rows(rows, rows.empty() ? 0 : rows.front().size());
    }

    static IntMat from_columns(const std::vector<IntVec>& cols, std::size_t rows) {
        return from_rows(cols, rows).transposed();
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    IntVec row(std::size_t i) const {
        return IntVec(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                      data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
    }

    IntVec col(std::size_t j) const {
        IntVec out(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            out[i] = (*this)(i, j);
        return out;
    }

    IntMat transposed() const {
        IntMat t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    IntVec operator*(const IntVec& x) const {
        if (x.size() != cols_)
            throw Error(ErrorKind::InvalidInput, "matrix-vector dimension mismatch");
        IntVec out(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                out[i] += (*this)(i, j) * x[j];
        return out;
    }

    friend IntMat operator*(const IntMat& a, const IntMat& b) {
        if (a.cols_ != b.rows_)
            throw Error(ErrorKind::InvalidInput, "matrix product dimension mismatch");
        IntMat c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a(i, k) == 0)
                    continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    c(i, j) += a(i, k) * b(k, j);
            }
        return c;
    }

    friend bool operator==(const IntMat&, const IntMat&) = default;

    void swap_rows(std::size_t a, std::size_t b) {
        for (std::size_t j = 0; j < cols_; ++j)
            std::swap((*this)(a, j), (*this)(b, j));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        for (std::size_t i = 0; i < rows_; ++i)
            std::swap((*this)(i, a), (*this)(i, b));
    }
    // row[dst] += factor * row[src]
    void add_row(std::size_t dst, std::size_t src, const BigInt& factor) {
        for (std::size_t j = 0; j < cols_; ++j)
            (*this)(dst, j) += factor * (*this)(src, j);
    }
    void add_col(std::size_t dst, std::size_t src, const BigInt& factor) {
        for (std::size_t i = 0; i < rows_; ++i)
            (*this)(i, dst) += factor * (*this)(i, src);
    }
    void negate_row(std::size_t r) {
        for (std::size_t j = 0; j < cols_; ++j)
            (*this)(r, j) = -(*this)(r, j);
    }

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BigInt> data_;
};

/// Rank over the rationals (fraction-free Bareiss elimination).
inline std::size_t rank(IntMat m) {
    std::size_t r = 0;
    BigInt prev = 1;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0)
            ++p;
        if (p == m.rows())
            continue;
        m.swap_rows(p, r);
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            for (std::size_t j = c + 1; j < m.cols(); ++j)
                m(i, j) = (m(r, c) * m(i, j) - m(i, c) * m(r, j)) / prev;
            m(i, c) = 0;
        }
        prev = m(r, c);
        ++r;
    }
    return r;
}

inline BigInt determinant(IntMat m) {
    if (m.rows() != m.cols())
        throw Error(ErrorKind::InvalidInput, "determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0)
        return 1;
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == 0)
                ++p;
            if (p == n)
                return 0;
            m.swap_rows(p, k);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / prev;
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

struct SmithForm {
    IntMat left;     // U
    IntMat diagonal; // S = U * A * V
    IntMat right;    // V

    std::vector<BigInt> invariant_factors() const {
        std::vector<BigInt> out;
        for (std::size_t i = 0; i < std::min(diagonal.rows(), diagonal.cols()); ++i)
            if (diagonal(i, i) != 0)
                out.push_back(diagonal(i, i));
        return out;
    }
};

/// U*A*V = S with U, V unimodular and S diagonal, nonnegative, d1 | d2 | ...
inline SmithForm smith_normal_form(const IntMat& a) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    IntMat s = a;
    IntMat u = IntMat::identity(m);
    IntMat v = IntMat::identity(n);

    for (std::size_t t = 0; t < std::min(m, n); ++t) {
        for (;;) {
            // smallest nonzero entry of the trailing block becomes the pivot
            std::optional<std::pair<std::size_t, std::size_t>> best;
            BigInt best_abs;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j) {
                    if (s(i, j) == 0)
                        continue;
                    BigInt x = boost::multiprecision::abs(s(i, j));
                    if (!best || x < best_abs) {
                        best = {i, j};
                        best_abs = x;
                    }
                }
            if (!best)
                break;
            s.swap_rows(t, best->first);
            u.swap_rows(t, best->first);
            s.swap_cols(t, best->second);
            v.swap_cols(t, best->second);

            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (s(i, t) == 0)
                    continue;
                BigInt q = s(i, t) / s(t, t);
                s.add_row(i, t, -q);
                u.add_row(i, t, -q);
                if (s(i, t) != 0)
                    clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (s(t, j) == 0)
                    continue;
                BigInt q = s(t, j) / s(t, t);
                s.add_col(j, t, -q);
                v.add_col(j, t, -q);
                if (s(t, j) != 0)
                    clean = false;
            }
            if (!clean)
                continue;

            std::optional<std::size_t> offending;
            for (std::size_t i = t + 1; i < m && !offending; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (s(i, j) % s(t, t) != 0) {
                        offending = i;
                        break;
                    }
            if (!offending)
                break;
            s.add_row(t, *offending, 1);
            u.add_row(t, *offending, 1);
        }
        if (s(t, t) < 0) {
            s.negate_row(t);
            u.negate_row(t);
        }
    }
    return {std::move(u), std::move(s), std::move(v)};
}

inline bool q_independent(const std::vector<IntVec>& vs) {
    if (vs.empty())
        return true;
    const std::size_t dim = vs.front().size();
    return rank(IntMat::from_rows(vs, dim)) == vs.size();
}

/// Inverse of a unimodular matrix. When the columns of `b` are a lattice
/// basis, the rows of the result are the dual basis.
inline IntMat invert_unimodular(const IntMat& b) {
    if (b.rows() != b.cols())
        throw Error(ErrorKind::InvalidInput, "invert_unimodular: matrix is not square");
    BigInt det = determinant(b);
    if (det != 1 && det != -1) {
        std::ostringstream os;
        os << "determinant is " << det;
        throw Error(ErrorKind::NotUnimodular, os.str());
    }
    // U*B*V = I  =>  B^{-1} = V*U
    SmithForm snf = smith_normal_form(b);
    return snf.right * snf.left;
}

namespace detail {

inline void check_nonneg_instance(const IntVec& target, std::span<const IntVec> gens) {
    for (const auto& x : target)
        if (x < 0)
            throw Error(ErrorKind::InvalidInput, "solve_nonneg: negative target entry");
    for (const auto& g : gens) {
        if (g.size() != target.size())
            throw Error(ErrorKind::InvalidInput, "solve_nonneg: dimension mismatch");
        for (const auto& x : g)
            if (x < 0)
                throw Error(ErrorKind::InvalidInput, "solve_nonneg: negative generator entry");
        if (is_zero(g))
            throw Error(ErrorKind::DegenerateGenerator, "zero generator " + to_string(g));
    }
}

inline BigInt coefficient_bound(const IntVec& remaining, const IntVec& gen) {
    std::optional<BigInt> bound;
    for (std::size_t j = 0; j < gen.size(); ++j)
        if (gen[j] > 0) {
            BigInt b = remaining[j] / gen[j];
            if (!bound || b < *bound)
                bound = b;
        }
    return *bound; // gen is nonzero, so some coordinate is positive
}

// last_support[j]: one past the last generator with a positive j-th entry.
// Returns false when the visitor asked to stop.
inline bool nonneg_dfs(std::size_t i, IntVec& remaining, std::span<const IntVec> gens,
                       const std::vector<std::size_t>& last_support, IntVec& coeffs,
                       const std::function<bool(const IntVec&)>& visit) {
    for (std::size_t j = 0; j < remaining.size(); ++j)
        if (remaining[j] != 0 && last_support[j] <= i)
            return true;
    if (i == gens.size())
        return visit(coeffs);
    const IntVec& g = gens[i];
    const BigInt bound = coefficient_bound(remaining, g);
    for (BigInt a = 0; a <= bound; ++a) {
        coeffs[i] = a;
        if (!nonneg_dfs(i + 1, remaining, gens, last_support, coeffs, visit)) {
            for (std::size_t j = 0; j < g.size(); ++j)
                remaining[j] += a * g[j];
            return false;
        }
        for (std::size_t j = 0; j < g.size(); ++j)
            remaining[j] -= g[j];
    }
    for (std::size_t j = 0; j < g.size(); ++j)
        remaining[j] += (bound + 1) * g[j];
    coeffs[i] = 0;
    return true;
}

using SmallVec = std::vector<std::int64_t>;

inline bool small_dfs(std::size_t i, SmallVec& remaining, const std::vector<SmallVec>& gens,
                      const std::vector<std::size_t>& last_support, SmallVec& coeffs,
                      const std::function<bool(const SmallVec&)>& visit) {
    for (std::size_t j = 0; j < remaining.size(); ++j)
        if (remaining[j] != 0 && last_support[j] <= i)
            return true;
    if (i == gens.size())
        return visit(coeffs);
    const SmallVec& g = gens[i];
    std::int64_t bound = std::numeric_limits<std::int64_t>::max();
    for (std::size_t j = 0; j < g.size(); ++j)
        if (g[j] > 0)
            bound = std::min(bound, remaining[j] / g[j]);
    std::int64_t a = 0;
    for (; a <= bound; ++a) {
        coeffs[i] = a;
        if (!small_dfs(i + 1, remaining, gens, last_support, coeffs, visit)) {
            for (std::size_t j = 0; j < g.size(); ++j)
                remaining[j] += a * g[j];
            return false;
        }
        for (std::size_t j = 0; j < g.size(); ++j)
            remaining[j] -= g[j];
    }
    for (std::size_t j = 0; j < g.size(); ++j)
        remaining[j] += a * g[j];
    coeffs[i] = 0;
    return true;
}

inline bool fits_small(const IntVec& v) {
    static constexpr std::int64_t limit = std::int64_t{1} << 40;
    return std::all_of(v.begin(), v.end(), [](const BigInt& x) { return x < limit; });
}

} // namespace detail

/// Visits every nonnegative integer coefficient vector `a` with
/// sum a_i * gens_i == target, in lexicographic order. The visitor returns
/// false to stop early.
inline void for_each_nonneg_solution(const IntVec& target, std::span<const IntVec> gens,
                                     const std::function<bool(const IntVec&)>& visit) {
    detail::check_nonneg_instance(target, gens);
    std::vector<std::size_t> last_support(target.size(), 0);
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = 0; j < target.size(); ++j)
            if (gens[i][j] > 0)
                last_support[j] = i + 1;
    if (detail::fits_small(target) && std::all_of(gens.begin(), gens.end(), detail::fits_small)) {
        auto shrink = [](const IntVec& v) {
            detail::SmallVec out(v.size());
            for (std::size_t j = 0; j < v.size(); ++j)
                out[j] = static_cast<std::int64_t>(v[j]);
            return out;
        };
        detail::SmallVec remaining = shrink(target);
        std::vector<detail::SmallVec> small;
        for (const auto& g : gens)
            small.push_back(shrink(g));
        detail::SmallVec coeffs(gens.size());
        detail::small_dfs(0, remaining, small, last_support, coeffs, [&](const detail::SmallVec& a) {
            return visit(IntVec(a.begin(), a.end()));
        });
        return;
    }
    IntVec remaining = target;
    IntVec coeffs(gens.size());
    detail::nonneg_dfs(0, remaining, gens, last_support, coeffs, visit);
}

/// Lexicographically first nonnegative solution, or nullopt.
inline std::optional<IntVec> solve_nonneg(const IntVec& target, std::span<const IntVec> gens) {
    std::optional<IntVec> found;
    for_each_nonneg_solution(target, gens, [&](const IntVec& a) {
        found = a;
        return false;
    });
    return found;
}

/// Integer constraint system: equalities coef . x == rhs and inequalities
/// coef . x >= bound over Z^dim.
struct LinearSystem {
    struct Row {
        IntVec coef;
        BigInt rhs;
    };

    std::size_t dim = 0;
    std::vector<Row> equalities;
    std::vector<Row> inequalities;

    LinearSystem() = default;
    explicit LinearSystem(std::size_t d) : dim(d) {}

    LinearSystem& equal(IntVec coef, BigInt rhs) {
        check(coef);
        equalities.push_back({std::move(coef), std::move(rhs)});
        return *this;
    }
    LinearSystem& at_least(IntVec coef, BigInt bound) {
        check(coef);
        inequalities.push_back({std::move(coef), std::move(bound)});
        return *this;
    }

    bool satisfied_by(const IntVec& x) const {
        for (const auto& r : equalities)
            if (dot(r.coef, x) != r.rhs)
                return false;
        for (const auto& r : inequalities)
            if (dot(r.coef, x) < r.rhs)
                return false;
        return true;
    }

  private:
    void check(const IntVec& coef) const {
        if (coef.size() != dim)
            throw Error(ErrorKind::InvalidInput, "constraint dimension mismatch");
    }
};

namespace fm {

/// coef . x >= bound (or == for equalities) over the rationals.
struct Row {
    std::vector<Rational> coef;
    Rational bound;
};

struct RationalSystem {
    std::size_t dim = 0;
    std::vector<Row> equalities;
    std::vector<Row> inequalities;

    static RationalSystem from(const LinearSystem& sys) {
        RationalSystem out;
        out.dim = sys.dim;
        auto convert = [](const LinearSystem::Row& r) {
            Row row;
            row.coef.assign(r.coef.begin(), r.coef.end());
            row.bound = r.rhs;
            return row;
        };
        for (const auto& r : sys.equalities)
            out.equalities.push_back(convert(r));
        for (const auto& r : sys.inequalities)
            out.inequalities.push_back(convert(r));
        return out;
    }
};

struct Range {
    bool feasible = true;
    std::optional<Rational> lower;
    std::optional<Rational> upper;
};

namespace detail {

inline bool all_zero(const std::vector<Rational>& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

// Positive rescaling so the coefficients are coprime integers.
inline void normalize(Row& r) {
    BigInt lcm = 1;
    for (const auto& c : r.coef)
        if (c != 0)
            lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(c));
    BigInt g = 0;
    for (const auto& c : r.coef)
        if (c != 0)
            g = boost::multiprecision::gcd(g, boost::multiprecision::numerator(c) * (lcm / boost::multiprecision::denominator(c)));
    if (g == 0)
        return;
    Rational scale = Rational(lcm) / Rational(boost::multiprecision::abs(g));
    for (auto& c : r.coef)
        c *= scale;
    r.bound *= scale;
}

// Inequality set with duplicate directions merged to the tightest bound.
class Halfspaces {
  public:
    bool infeasible = false;

    void add(Row r) {
        if (all_zero(r.coef)) {
            if (r.bound > 0)
                infeasible = true;
            return;
        }
        normalize(r);
        auto [it, inserted] = rows_.try_emplace(r.coef, r.bound);
        if (!inserted && r.bound > it->second)
            it->second = r.bound;
    }

    std::vector<Row> rows() const {
        std::vector<Row> out;
        out.reserve(rows_.size());
        for (const auto& [coef, bound] : rows_)
            out.push_back({coef, bound});
        return out;
    }

  private:
    std::map<std::vector<Rational>, Rational> rows_;
};

inline Halfspaces eliminate(const std::vector<Row>& rows, std::size_t var) {
    Halfspaces out;
    std::vector<const Row*> pos, neg;
    for (const auto& r : rows) {
        if (r.coef[var] > 0)
            pos.push_back(&r);
        else if (r.coef[var] < 0)
            neg.push_back(&r);
        else
            out.add(r);
    }
    for (const Row* p : pos)
        for (const Row* q : neg) {
            const Rational a = p->coef[var];
            const Rational b = -q->coef[var];
            Row combined;
            combined.coef.resize(p->coef.size());
            for (std::size_t j = 0; j < combined.coef.size(); ++j)
                combined.coef[j] = b * p->coef[j] + a * q->coef[j];
            combined.coef[var] = 0;
            combined.bound = b * p->bound + a * q->bound;
            out.add(std::move(combined));
        }
    return out;
}

} // namespace detail

/// Exact range of objective . x over the rational polyhedron. Equalities are
/// substituted away first; the remaining variables are removed by
/// Fourier-Motzkin elimination against an auxiliary objective variable.
inline Range objective_range(const RationalSystem& sys, const std::vector<Rational>& objective) {
    const std::size_t n = sys.dim;
    std::vector<Row> eqs = sys.equalities;
    std::vector<Row> ineqs = sys.inequalities;
    std::vector<Rational> obj = objective;
    Rational obj_const = 0;
    std::vector<bool> pivoted(n, false);

    auto substitute = [](Row& target, const Row& eq, std::size_t p) {
        if (target.coef[p] == 0)
            return;
        Rational f = target.coef[p] / eq.coef[p];
        for (std::size_t j = 0; j < target.coef.size(); ++j)
            target.coef[j] -= f * eq.coef[j];
        target.bound -= f * eq.bound;
    };

    for (std::size_t e = 0; e < eqs.size(); ++e) {
        const Row& eq = eqs[e];
        std::optional<std::size_t> p;
        for (std::size_t j = 0; j < n; ++j)
            if (eq.coef[j] != 0) {
                p = j;
                break;
            }
        if (!p) {
            if (eq.bound != 0)
                return {false, {}, {}};
            continue;
        }
        pivoted[*p] = true;
        for (std::size_t f = e + 1; f < eqs.size(); ++f)
            substitute(eqs[f], eq, *p);
        for (auto& r : ineqs)
            substitute(r, eq, *p);
        if (obj[*p] != 0) {
            Rational f = obj[*p] / eq.coef[*p];
            for (std::size_t j = 0; j < n; ++j)
                obj[j] -= f * eq.coef[j];
            obj_const += f * eq.bound;
        }
    }

    // auxiliary variable t at index n with t == obj . x + obj_const
    std::vector<Row> rows;
    rows.reserve(ineqs.size() + 2);
    for (auto& r : ineqs) {
        r.coef.push_back(0);
        rows.push_back(std::move(r));
    }
    Row up, down;
    up.coef.resize(n + 1);
    down.coef.resize(n + 1);
    for (std::size_t j = 0; j < n; ++j) {
        up.coef[j] = -obj[j];
        down.coef[j] = obj[j];
    }
    up.coef[n] = 1;
    up.bound = obj_const;
    down.coef[n] = -1;
    down.bound = -obj_const;
    rows.push_back(std::move(up));
    rows.push_back(std::move(down));

    detail::Halfspaces current;
    for (auto& r : rows)
        current.add(std::move(r));
    if (current.infeasible)
        return {false, {}, {}};
    rows = current.rows();

    std::vector<bool> remaining(n, true);
    for (std::size_t j = 0; j < n; ++j)
        if (pivoted[j])
            remaining[j] = false;

    for (;;) {
        // eliminate the variable producing the fewest new rows
        std::optional<std::size_t> pick;
        long long best_cost = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (!remaining[j])
                continue;
            long long pos = 0, neg = 0;
            for (const auto& r : rows) {
                if (r.coef[j] > 0)
                    ++pos;
                else if (r.coef[j] < 0)
                    ++neg;
            }
            long long cost = pos * neg - pos - neg;
            if (!pick || cost < best_cost) {
                pick = j;
                best_cost = cost;
            }
        }
        if (!pick)
            break;
        remaining[*pick] = false;
        detail::Halfspaces next = detail::eliminate(rows, *pick);
        if (next.infeasible)
            return {false, {}, {}};
        rows = next.rows();
    }

    Range range;
    for (const auto& r : rows) {
        const Rational& a = r.coef[n];
        if (a > 0) {
            Rational lo = r.bound / a;
            if (!range.lower || lo > *range.lower)
                range.lower = lo;
        } else if (a < 0) {
            Rational hi = r.bound / a;
            if (!range.upper || hi < *range.upper)
                range.upper = hi;
        }
    }
    if (range.lower && range.upper && *range.lower > *range.upper)
        return {false, {}, {}};
    return range;
}

inline bool feasible(const RationalSystem& sys) {
    return objective_range(sys, std::vector<Rational>(sys.dim)).feasible;
}

} // namespace fm

namespace detail {

inline void lattice_dfs(const fm::RationalSystem& base, const LinearSystem& sys, IntVec& prefix,
                        std::vector<IntVec>& out) {
    const std::size_t i = prefix.size();
    if (i == sys.dim) {
        if (sys.satisfied_by(prefix))
            out.push_back(prefix);
        return;
    }
    fm::RationalSystem fixed = base;
    for (std::size_t j = 0; j < i; ++j) {
        fm::Row r;
        r.coef.assign(sys.dim, 0);
        r.coef[j] = 1;
        r.bound = prefix[j];
        fixed.equalities.push_back(std::move(r));
    }
    std::vector<Rational> unit(sys.dim, 0);
    unit[i] = 1;
    fm::Range range = fm::objective_range(fixed, unit);
    if (!range.feasible)
        return;
    // bounded overall, hence bounded on every slice
    const BigInt lo = ceil_of(*range.lower);
    const BigInt hi = floor_of(*range.upper);
    for (BigInt x = lo; x <= hi; ++x) {
        prefix.push_back(x);
        lattice_dfs(base, sys, prefix, out);
        prefix.pop_back();
    }
}

} // namespace detail

/// All integer points of the system in lexicographic order. Throws
/// Unbounded if some coordinate is unbounded on a nonempty system.
inline std::vector<IntVec> lattice_points(const LinearSystem& sys) {
    const fm::RationalSystem base = fm::RationalSystem::from(sys);
    for (std::size_t i = 0; i < sys.dim; ++i) {
        std::vector<Rational> unit(sys.dim, 0);
        unit[i] = 1;
        fm::Range range = fm::objective_range(base, unit);
        if (!range.feasible)
            return {};
        if (!range.lower || !range.upper)
            throw Error(ErrorKind::Unbounded, "coordinate " + std::to_string(i) + " is unbounded");
    }
    std::vector<IntVec> out;
    IntVec prefix;
    detail::lattice_dfs(base, sys, prefix, out);
    return out;
}

} // namespace uniorb
