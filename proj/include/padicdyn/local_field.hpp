#pragma once

#include "errors.hpp"
#include "util.hpp"

#include <algorithm>
#include <cassert>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace padicdyn {

class LocalField;
class PadicElem;
using FieldPtr = std::shared_ptr<const LocalField>;

// ---------------------------------------------------------------------------
// Residue field element: a vector of f coefficients mod p representing an
// element of kappa = F_p[y]/(unram_poly mod p).
// ---------------------------------------------------------------------------
class ResidueElem {
public:
    ResidueElem() = default;
    ResidueElem(FieldPtr F, std::vector<long> c) : F_(std::move(F)), c_(std::move(c)) {}

    const FieldPtr& field() const { return F_; }
    const std::vector<long>& coeffs() const { return c_; }

    bool is_zero() const {
        return std::all_of(c_.begin(), c_.end(), [](long x) { return x == 0; });
    }

    // Integer encoding sum c_i p^i in [0, q); fixes the enumeration order used
    // for deterministic root/lift tie-breaking.
    BigInt encode() const;

    ResidueElem operator+(const ResidueElem& o) const;
    ResidueElem operator-(const ResidueElem& o) const;
    ResidueElem operator*(const ResidueElem& o) const;
    ResidueElem inverse() const;
    ResidueElem pow(const BigInt& n) const;
    bool operator==(const ResidueElem& o) const { return c_ == o.c_; }
    bool operator!=(const ResidueElem& o) const { return !(*this == o); }

private:
    FieldPtr F_;
    std::vector<long> c_;
};

// ---------------------------------------------------------------------------
// Field descriptor for a finite extension K/Q_p given by an unramified part
// (monic polynomial of degree f, irreducible mod p) and an optional Eisenstein
// part (monic of degree e).  Elements of o_K are stored on the Z_p-basis
// a^i pi^j with 0 <= i < f, 0 <= j < e; coefficient index is i + f*j.
// ---------------------------------------------------------------------------
class LocalField : public std::enable_shared_from_this<LocalField> {
public:
    long p = 0;
    int f = 1;
    int e = 1;
    int default_prec = 64; // working precision in pi-digits
    BigInt q;              // p^f

    std::vector<BigInt> unram_poly; // monic, degree f
    std::vector<BigInt> eis_poly;   // monic, degree e; empty iff e == 1 (pi = p)

    static FieldPtr make(long p, std::vector<BigInt> unram, std::vector<BigInt> eis,
                         int precision = 64) {
        auto F = std::shared_ptr<LocalField>(new LocalField());
        if (!is_prime_small(p)) throw SchemaError("p must be prime");
        F->p = p;
        if (unram.empty()) unram = {BigInt(0), BigInt(1)};
        F->unram_poly = unram;
        F->f = static_cast<int>(unram.size()) - 1;
        if (F->f < 1 || unram.back() != 1)
            throw SchemaError("unram_poly must be monic of degree >= 1");
        F->eis_poly = eis;
        F->e = eis.empty() ? 1 : static_cast<int>(eis.size()) - 1;
        if (!eis.empty()) {
            if (F->e < 1 || eis.back() != 1) throw SchemaError("eis_poly must be monic");
            if (vp_of(eis[0], p, 3) != 1) throw SchemaError("eis_poly constant term needs v_p = 1");
            for (int i = 1; i < F->e; ++i)
                if (vp_of(eis[i], p, 2) < 1)
                    throw SchemaError("eis_poly middle coefficients need v_p >= 1");
            if (F->e == 1) F->eis_poly.clear(); // degree-1 Eisenstein adds nothing
        }
        if (precision < 4) throw SchemaError("precision must be >= 4");
        F->default_prec = precision;
        F->q = pow_big(p, static_cast<unsigned long>(F->f));
        F->check_unram_irreducible();
        if (F->e > 1) {
            F->Uinv_cache_M_ = static_cast<int>(4LL * precision / F->e + 16);
            F->Uinv_cache_ = F->compute_U_inv(F->Uinv_cache_M_);
        }
        return F;
    }

    static FieldPtr Qp(long p, int precision = 64) {
        return make(p, {}, {}, precision);
    }

    // Unramified extension of degree f given by its defining polynomial.
    static FieldPtr unramified(long p, std::vector<BigInt> poly, int precision = 64) {
        return make(p, std::move(poly), {}, precision);
    }

    int degree() const { return e * f; }

    // Smallest integer strictly greater than e/(p-1); the convergence level
    // for exp and the congruence level for Mahler interpolation.
    long long poonen_level() const { return e / (p - 1) + 1; }

    // ---- residue field -----------------------------------------------------
    ResidueElem res_zero() const { return {shared_from_this(), std::vector<long>(f, 0)}; }
    ResidueElem res_one() const {
        std::vector<long> c(f, 0);
        c[0] = 1;
        return {shared_from_this(), c};
    }
    ResidueElem res_from_code(const BigInt& code) const {
        BigInt n = mod_floor(code, q);
        std::vector<long> c(f, 0);
        for (int i = 0; i < f; ++i) {
            c[i] = static_cast<long>(n % p);
            n /= p;
        }
        return {shared_from_this(), c};
    }

    std::vector<long> res_add(const std::vector<long>& a, const std::vector<long>& b) const {
        std::vector<long> c(f);
        for (int i = 0; i < f; ++i) c[i] = (a[i] + b[i]) % p;
        return c;
    }
    std::vector<long> res_sub(const std::vector<long>& a, const std::vector<long>& b) const {
        std::vector<long> c(f);
        for (int i = 0; i < f; ++i) c[i] = ((a[i] - b[i]) % p + p) % p;
        return c;
    }
    std::vector<long> res_mul(const std::vector<long>& a, const std::vector<long>& b) const {
        std::vector<long> prod(2 * f - 1, 0);
        for (int i = 0; i < f; ++i) {
            if (a[i] == 0) continue;
            for (int j = 0; j < f; ++j)
                prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
        }
        // reduce by unram_poly mod p (monic): y^f = -sum u_t y^t
        for (int d = 2 * f - 2; d >= f; --d) {
            long top = prod[d];
            if (top == 0) continue;
            prod[d] = 0;
            for (int t = 0; t < f; ++t) {
                long u = static_cast<long>(mod_floor(unram_poly[t], p));
                prod[d - f + t] = ((prod[d - f + t] - top * u) % p + p) % p;
            }
        }
        prod.resize(f);
        return prod;
    }
    std::vector<long> res_pow(std::vector<long> a, BigInt n) const {
        std::vector<long> one(f, 0);
        one[0] = 1;
        bool zero = std::all_of(a.begin(), a.end(), [](long x) { return x == 0; });
        if (zero) return n == 0 ? one : std::vector<long>(f, 0);
        n = mod_floor(n, q - 1); // exponent lives in Z/(q-1) on kappa^*
        std::vector<long> r = one;
        while (n > 0) {
            if (n % 2 == 1) r = res_mul(r, a);
            a = res_mul(a, a);
            n /= 2;
        }
        return r;
    }
    std::vector<long> res_inv(const std::vector<long>& a) const {
        bool zero = std::all_of(a.begin(), a.end(), [](long x) { return x == 0; });
        if (zero) throw NotAUnit("residue inverse of zero");
        return res_pow(a, q - 2);
    }

    // ---- raw o_K/p^M coefficient-vector arithmetic --------------------------
    using Vec = std::vector<BigInt>; // size f*e, index i + f*j  <->  a^i pi^j

    int idx(int i, int j) const { return i + f * j; }

    Vec vec_zero() const { return Vec(static_cast<size_t>(f) * e, BigInt(0)); }

    Vec vec_add(const Vec& A, const Vec& B, const BigInt& pM) const {
        Vec C(A.size());
        for (size_t t = 0; t < A.size(); ++t) C[t] = mod_floor(A[t] + B[t], pM);
        return C;
    }
    Vec vec_sub(const Vec& A, const Vec& B, const BigInt& pM) const {
        Vec C(A.size());
        for (size_t t = 0; t < A.size(); ++t) C[t] = mod_floor(A[t] - B[t], pM);
        return C;
    }

    Vec vec_mul(const Vec& A, const Vec& B, const BigInt& pM) const {
        const int fa = 2 * f - 1, ea = 2 * e - 1;
        std::vector<BigInt> W(static_cast<size_t>(fa) * ea, BigInt(0));
        for (int j1 = 0; j1 < e; ++j1)
            for (int i1 = 0; i1 < f; ++i1) {
                const BigInt& x = A[idx(i1, j1)];
                if (x == 0) continue;
                for (int j2 = 0; j2 < e; ++j2)
                    for (int i2 = 0; i2 < f; ++i2) {
                        const BigInt& y = B[idx(i2, j2)];
                        if (y == 0) continue;
                        W[(i1 + i2) + static_cast<size_t>(fa) * (j1 + j2)] += x * y;
                    }
            }
        reduce_a_degree(W, fa, ea, pM);
        reduce_pi_degree(W, fa, ea, pM);
        Vec C = vec_zero();
        for (int j = 0; j < e; ++j)
            for (int i = 0; i < f; ++i) C[idx(i, j)] = mod_floor(W[i + static_cast<size_t>(fa) * j], pM);
        return C;
    }

    // Multiplication by pi^s for 0 <= s < e (shift pi-index, fold overflow).
    Vec vec_mul_pi(const Vec& A, int s, const BigInt& pM) const {
        if (s == 0) return A;
        if (e == 1) {
            Vec C(A.size());
            BigInt ps = pow_big(p, s);
            for (size_t t = 0; t < A.size(); ++t) C[t] = mod_floor(A[t] * ps, pM);
            return C;
        }
        const int fa = f, ea = e + s;
        std::vector<BigInt> W(static_cast<size_t>(fa) * ea, BigInt(0));
        for (int j = 0; j < e; ++j)
            for (int i = 0; i < f; ++i) W[i + static_cast<size_t>(fa) * (j + s)] = A[idx(i, j)];
        reduce_pi_degree(W, fa, ea, pM);
        Vec C = vec_zero();
        for (int j = 0; j < e; ++j)
            for (int i = 0; i < f; ++i) C[idx(i, j)] = mod_floor(W[i + static_cast<size_t>(fa) * j], pM);
        return C;
    }

    // pi-valuation of the vector; entries are exact mod p^M.  Returns
    // kInfVal when every entry vanishes mod p^M.
    long long vec_val(const Vec& A, int M) const {
        long long best = kInfVal;
        for (int j = 0; j < e; ++j)
            for (int i = 0; i < f; ++i) {
                long v = vp_of(A[idx(i, j)], p, M);
                if (v >= M) continue;
                best = std::min<long long>(best, static_cast<long long>(e) * v + j);
            }
        return best;
    }

    // Exact division by pi^v (caller guarantees v <= vec_val).  Costs
    // ceil(v/e) p-digits of coefficient precision: M -> M - ceil(v/e).
    Vec vec_div_pi_pow(const Vec& A, long long v, int M, int& M_out) const {
        if (v == 0) {
            M_out = M;
            return A;
        }
        long long t = (v + e - 1) / e;
        long long s = t * e - v;
        M_out = static_cast<int>(M - t);
        if (M_out < 1) throw PrecisionExhausted("pi-division exhausted coefficient precision");
        BigInt pM = pow_big(p, M);
        Vec y = A;
        if (e == 1) {
            BigInt pt = pow_big(p, static_cast<unsigned long>(t));
            BigInt pMo = pow_big(p, M_out);
            Vec C(y.size());
            for (size_t k = 0; k < y.size(); ++k) {
                if (y[k] % pt != 0) throw PrecisionExhausted("inexact division by pi");
                C[k] = mod_floor(y[k] / pt, pMo);
            }
            return C;
        }
        y = vec_mul_pi(y, static_cast<int>(s), pM); // s = t*e - v lies in [0, e)
        Vec w = unit_U_inv(M);
        Vec wt = vec_one();
        for (long long r = 0; r < t; ++r) wt = vec_mul(wt, w, pM);
        y = vec_mul(y, wt, pM);
        if (t % 2 == 1)
            for (auto& c : y) c = mod_floor(-c, pM);
        BigInt pt = pow_big(p, static_cast<unsigned long>(t));
        BigInt pMo = pow_big(p, M_out);
        Vec C(y.size());
        for (size_t k = 0; k < y.size(); ++k) {
            if (y[k] % pt != 0) throw PrecisionExhausted("inexact division by pi");
            C[k] = mod_floor(y[k] / pt, pMo);
        }
        return C;
    }

    Vec vec_one() const {
        Vec v = vec_zero();
        v[0] = 1;
        return v;
    }

    // Newton inversion of a unit vector mod p^M.
    Vec vec_inv_unit(const Vec& A, int M) const {
        // residue inverse: reduce mod (p, pi) to kappa, invert there
        std::vector<long> r(f);
        for (int i = 0; i < f; ++i) r[i] = static_cast<long>(mod_floor(A[idx(i, 0)], p));
        bool zero = std::all_of(r.begin(), r.end(), [](long x) { return x == 0; });
        if (zero) throw NotAUnit("vec_inv_unit: residue is zero");
        // For e > 1 the ring mod p is kappa[pi]/(pi^e); invert the pi-series.
        // Start from the kappa-inverse and Newton-lift through p-powers; the
        // same iteration also absorbs the pi-tail.
        std::vector<long> rinv = res_inv(r);
        Vec x = vec_zero();
        for (int i = 0; i < f; ++i) x[idx(i, 0)] = rinv[i];
        // x <- x(1 + E) with E = 1 - Ax squares the error each round,
        // covering both the p-direction and the pi-tail.
        BigInt pM = pow_big(p, M);
        bool converged = false;
        for (int it = 0; it < 64; ++it) {
            Vec ax = vec_mul(A, x, pM);
            Vec E = vec_sub(vec_one(), ax, pM);
            if (vec_val(E, M) >= static_cast<long long>(e) * M) {
                converged = true;
                break;
            }
            x = vec_mul(x, vec_add(vec_one(), E, pM), pM);
        }
        if (!converged) throw InternalDisagreement("unit inversion failed to converge");
        return x;
    }

    // Unit part of the integer p^vp * m as a coefficient vector: since
    // p = -pi^e U^{-1}, the unit is (-1)^vp U^{-vp} m.
    Vec int_unit_vec(const BigInt& unit_int, long long vp, int M) const {
        BigInt pM = pow_big(p, M);
        Vec u = vec_zero();
        u[0] = mod_floor(unit_int, pM);
        if (e > 1 && vp > 0) {
            Vec w = unit_U_inv(M);
            Vec wp = vec_one();
            long long t = vp;
            while (t > 0) {
                if (t & 1) wp = vec_mul(wp, w, pM);
                w = vec_mul(w, w, pM);
                t >>= 1;
            }
            u = vec_mul(u, wp, pM);
            if (vp % 2 == 1)
                for (auto& c : u) c = mod_floor(-c, pM);
        }
        return u;
    }

    // ---- enumeration --------------------------------------------------------
    // kappa-representative as a coefficient vector (polynomial representative).
    Vec res_rep_vec(const ResidueElem& r) const {
        Vec v = vec_zero();
        for (int i = 0; i < f; ++i) v[idx(i, 0)] = r.coeffs()[i];
        return v;
    }

private:
    LocalField() = default;

    void reduce_a_degree(std::vector<BigInt>& W, int fa, int ea, const BigInt& pM) const {
        if (f == 1) return; // unram_poly = x - c: a-degree already 0
        for (int j = 0; j < ea; ++j)
            for (int d = fa - 1; d >= f; --d) {
                BigInt top = W[d + static_cast<size_t>(fa) * j];
                if (top == 0) continue;
                W[d + static_cast<size_t>(fa) * j] = 0;
                for (int t = 0; t < f; ++t)
                    W[(d - f + t) + static_cast<size_t>(fa) * j] =
                        mod_floor(W[(d - f + t) + static_cast<size_t>(fa) * j] - top * unram_poly[t], pM);
            }
    }

    void reduce_pi_degree(std::vector<BigInt>& W, int fa, int ea, const BigInt& pM) const {
        for (int d = ea - 1; d >= e; --d)
            for (int i = 0; i < fa; ++i) {
                BigInt top = W[i + static_cast<size_t>(fa) * d];
                if (top == 0) continue;
                W[i + static_cast<size_t>(fa) * d] = 0;
                if (e == 1) {
                    // pi = p: pi^d = p^d folds into the constant slot
                    W[i] = mod_floor(W[i] + top * pow_big(p, d), pM);
                } else {
                    for (int s = 0; s < e; ++s)
                        W[i + static_cast<size_t>(fa) * (d - e + s)] =
                            mod_floor(W[i + static_cast<size_t>(fa) * (d - e + s)] - top * eis_poly[s], pM);
                }
            }
    }

    Vec pi_e_vec(const BigInt& pM) const {
        // pi^e = -(sum eis_s pi^s) as a coefficient vector
        Vec v = vec_zero();
        for (int s = 0; s < e; ++s) v[idx(0, s)] = mod_floor(-eis_poly[s], pM);
        return v;
    }

    // U = (eis_0 + eis_1 pi + ... + eis_{e-1} pi^{e-1})/p, a unit; returns U^{-1} mod p^M.
    // Cached at construction for the common precision range; recomputed (pure)
    // beyond it so values stay immutable after make().
    Vec unit_U_inv(int M) const {
        if (M <= Uinv_cache_M_) {
            BigInt pM = pow_big(p, M);
            Vec v = Uinv_cache_;
            for (auto& c : v) c = mod_floor(c, pM);
            return v;
        }
        return compute_U_inv(M);
    }

    Vec compute_U_inv(int M) const {
        Vec U = vec_zero();
        for (int s = 0; s < e; ++s) U[idx(0, s)] = mod_floor(eis_poly[s] / p, pow_big(p, M));
        return vec_inv_unit(U, M);
    }

    Vec Uinv_cache_;
    int Uinv_cache_M_ = 0;

    void check_unram_irreducible() const {
        if (f == 1) return;
        // x^(p^f) == x mod (poly, p) and gcd(x^(p^(f/l)) - x, poly) == 1 for primes l | f
        auto frob = [&](int k) {
            // compute y^(p^k) in kappa where y is the class of x
            std::vector<long> y(f, 0);
            if (f > 1) y[1] = 1;
            std::vector<long> r = y;
            BigInt n = pow_big(p, static_cast<unsigned long>(k));
            // repeated squaring exponent p^k
            std::vector<long> acc(f, 0);
            acc[0] = 1;
            std::vector<long> base = y;
            while (n > 0) {
                if (n % 2 == 1) acc = res_mul(acc, base);
                base = res_mul(base, base);
                n /= 2;
            }
            return acc;
        };
        std::vector<long> xf = frob(f);
        std::vector<long> x1(f, 0);
        if (f > 1) x1[1] = 1;
        if (xf != x1) throw SchemaError("unram_poly is not irreducible mod p");
        for (int l = 2; l <= f; ++l) {
            if (f % l != 0 || !is_prime_small(l)) continue;
            std::vector<long> xk = frob(f / l);
            if (xk == x1) throw SchemaError("unram_poly is not irreducible mod p");
        }
    }
};

inline BigInt ResidueElem::encode() const {
    BigInt code = 0;
    for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i) code = code * F_->p + c_[i];
    return code;
}
inline ResidueElem ResidueElem::operator+(const ResidueElem& o) const {
    return {F_, F_->res_add(c_, o.c_)};
}
inline ResidueElem ResidueElem::operator-(const ResidueElem& o) const {
    return {F_, F_->res_sub(c_, o.c_)};
}
inline ResidueElem ResidueElem::operator*(const ResidueElem& o) const {
    return {F_, F_->res_mul(c_, o.c_)};
}
inline ResidueElem ResidueElem::inverse() const { return {F_, F_->res_inv(c_)}; }
inline ResidueElem ResidueElem::pow(const BigInt& n) const { return {F_, F_->res_pow(c_, n)}; }

// ---------------------------------------------------------------------------
// PadicElem: a capped-precision element of K.  Three states:
//   ExactZero    -- constructed as zero or from exact cancellation
//   ZeroToPrec   -- all digits vanish mod pi^aprec, nothing more known
//   Unit         -- x = pi^val * u with u a unit known mod pi^(aprec - val)
// Arithmetic never reports more precision than the operands support.
// ---------------------------------------------------------------------------
enum class ZeroClass { ProvablyNonzero, ExactlyZero, IndistinguishableZero };

class PadicElem {
public:
    PadicElem() = default;

    static PadicElem zero(const FieldPtr& F) {
        PadicElem x;
        x.F_ = F;
        x.st_ = St::ExactZero;
        x.val_ = kInfVal;
        x.aprec_ = kInfVal;
        return x;
    }

    static PadicElem zero_to_prec(const FieldPtr& F, long long aprec) {
        PadicElem x;
        x.F_ = F;
        x.st_ = St::ZeroToPrec;
        x.val_ = aprec;
        x.aprec_ = aprec;
        return x;
    }

    static PadicElem from_int(const FieldPtr& F, const BigInt& n) {
        return from_int_rel(F, n, F->default_prec);
    }

    static PadicElem from_int_rel(const FieldPtr& F, const BigInt& n, long long rel) {
        if (n == 0) return zero(F);
        long long vp = vp_of(n, F->p, static_cast<long>(rel + 4));
        long long val = static_cast<long long>(F->e) * vp;
        int M = need_M(F, rel);
        BigInt unit = n / pow_big(F->p, static_cast<unsigned long>(vp));
        PadicElem x;
        x.F_ = F;
        x.st_ = St::Unit;
        x.val_ = val;
        x.aprec_ = val + rel;
        x.M_ = M;
        x.u_ = F->int_unit_vec(unit, vp, M);
        return x;
    }

    // a/b with p-unit denominator embeds exactly; otherwise valuation shifts.
    static PadicElem from_rational(const FieldPtr& F, const BigRat& r) {
        PadicElem n = from_int_rel(F, numerator(r), F->default_prec + 8);
        PadicElem d = from_int_rel(F, denominator(r), F->default_prec + 8);
        return (n / d).reduced_to(n.is_exact_zero() ? kInfVal
                                                    : n.val_ - d.val_ + F->default_prec);
    }

    // Element from explicit pi-digits (kappa codes, little-endian).
    static PadicElem from_digits(const FieldPtr& F, const std::vector<BigInt>& digit_codes,
                                 long long val_shift, long long aprec) {
        auto acc = zero_to_prec(F, aprec);
        PadicElem sum = zero(F);
        for (size_t t = 0; t < digit_codes.size(); ++t) {
            ResidueElem d = F->res_from_code(digit_codes[t]);
            PadicElem rep = from_res_rep(F, d, aprec);
            sum = sum + rep.shifted(static_cast<long long>(t));
        }
        sum = sum.shifted(val_shift);
        return sum.reduced_to(aprec);
    }

    // Polynomial representative of a residue element, at given absolute precision.
    static PadicElem from_res_rep(const FieldPtr& F, const ResidueElem& r, long long aprec) {
        bool zero_r = std::all_of(r.coeffs().begin(), r.coeffs().end(),
                                  [](long x) { return x == 0; });
        if (zero_r) return zero(F);
        PadicElem x;
        x.F_ = F;
        x.st_ = St::Unit;
        LocalField::Vec v = F->res_rep_vec(r);
        long long val = F->vec_val(v, 2);
        x.val_ = val; // 0: representative has unit residue
        x.aprec_ = aprec;
        x.M_ = need_M(F, aprec - val);
        x.u_ = v;
        return x;
    }

    const FieldPtr& field() const { return F_; }

    ZeroClass zero_class() const {
        switch (st_) {
            case St::ExactZero: return ZeroClass::ExactlyZero;
            case St::ZeroToPrec: return ZeroClass::IndistinguishableZero;
            default: return ZeroClass::ProvablyNonzero;
        }
    }
    bool is_exact_zero() const { return st_ == St::ExactZero; }
    bool provably_nonzero() const { return st_ == St::Unit; }
    bool indistinguishable_from_zero() const { return st_ != St::Unit; }

    // Valuation: exact for Unit, lower bound (== aprec) for ZeroToPrec, kInfVal for ExactZero.
    long long val() const { return val_; }
    long long aprec() const { return aprec_; }
    long long relprec() const { return st_ == St::Unit ? aprec_ - val_ : 0; }

    PadicElem operator-() const {
        if (st_ != St::Unit) return *this;
        PadicElem r = *this;
        BigInt pM = pow_big(F_->p, M_);
        for (auto& c : r.u_) c = mod_floor(-c, pM);
        return r;
    }

    PadicElem operator+(const PadicElem& o) const {
        check_same_field(o);
        if (st_ == St::ExactZero) return o;
        if (o.st_ == St::ExactZero) return *this;
        long long ap = std::min(aprec_, o.aprec_);
        if (st_ != St::Unit && o.st_ != St::Unit)
            return zero_to_prec(F_, std::min(ap, std::min(val_, o.val_)));
        if (st_ != St::Unit) return o.reduced_to(std::min(ap, val_));
        if (o.st_ != St::Unit) return reduced_to(std::min(ap, o.val_));
        if (val_ >= ap) return o.reduced_to(ap);
        if (o.val_ >= ap) return reduced_to(ap);
        long long base = std::min(val_, o.val_);
        long long rel_known = ap - base;
        if (rel_known <= 0) return zero_to_prec(F_, ap);
        int M = need_M(F_, rel_known) + 1;
        LocalField::Vec A = shifted_vec(M, base);
        LocalField::Vec B = o.shifted_vec(M, base);
        BigInt pM = pow_big(F_->p, M);
        return normalize(F_, F_->vec_add(A, B, pM), M, base, ap);
    }

    PadicElem operator-(const PadicElem& o) const {
        check_same_field(o);
        // identical capped representations cancel exactly
        if (st_ == o.st_ && val_ == o.val_ && aprec_ == o.aprec_ && u_ == o.u_ &&
            F_ == o.F_ && st_ == St::Unit)
            return zero(F_);
        if (o.st_ == St::ExactZero) return *this;
        return *this + (-o);
    }

    PadicElem operator*(const PadicElem& o) const {
        check_same_field(o);
        if (st_ == St::ExactZero || o.st_ == St::ExactZero) return zero(F_);
        if (st_ != St::Unit || o.st_ != St::Unit)
            return zero_to_prec(F_, sat_add(val_, o.val_));
        long long rel = std::min(relprec(), o.relprec());
        long long val = sat_add(val_, o.val_);
        if (is_inf(val)) return zero_to_prec(F_, kInfVal / 4);
        int M = need_M(F_, rel);
        BigInt pM = pow_big(F_->p, M);
        PadicElem r;
        r.F_ = F_;
        r.st_ = St::Unit;
        r.val_ = val;
        r.aprec_ = val + rel;
        r.M_ = M;
        r.u_ = F_->vec_mul(unit_at(M), o.unit_at(M), pM);
        return r;
    }

    PadicElem operator/(const PadicElem& o) const {
        check_same_field(o);
        if (o.st_ != St::Unit) throw DivisionByIndistinguishableZero();
        if (st_ == St::ExactZero) return zero(F_);
        if (st_ != St::Unit) return zero_to_prec(F_, val_ - o.val_);
        long long rel = std::min(relprec(), o.relprec());
        long long val = val_ - o.val_;
        int M = need_M(F_, rel);
        BigInt pM = pow_big(F_->p, M);
        PadicElem r;
        r.F_ = F_;
        r.st_ = St::Unit;
        r.val_ = val;
        r.aprec_ = val + rel;
        r.M_ = M;
        r.u_ = F_->vec_mul(unit_at(M), F_->vec_inv_unit(o.unit_at(M), M), pM);
        return r;
    }

    PadicElem inverse() const {
        return from_int_rel(F_, 1, relprec() > 0 ? relprec() : F_->default_prec) / *this;
    }

    PadicElem pow(BigInt n) const {
        if (n == 0) return from_int_rel(F_, 1, st_ == St::Unit ? relprec() : F_->default_prec);
        if (n < 0) return inverse().pow(-n);
        PadicElem r = from_int_rel(F_, 1, st_ == St::Unit ? relprec() : F_->default_prec);
        PadicElem b = *this;
        while (n > 0) {
            if (n % 2 == 1) r = r * b;
            b = b * b;
            n /= 2;
        }
        return r;
    }

    // x * pi^s (exact shift of valuation).
    PadicElem shifted(long long s) const {
        if (st_ == St::ExactZero) return *this;
        PadicElem r = *this;
        r.val_ = sat_add(val_, s);
        r.aprec_ = sat_add(aprec_, s);
        return r;
    }

    // Cap absolute precision at ap (no-op if already lower).
    PadicElem reduced_to(long long ap) const {
        if (st_ == St::ExactZero) {
            return *this;
        }
        if (ap >= aprec_) return *this;
        if (st_ == St::ZeroToPrec || val_ >= ap) return zero_to_prec(F_, ap);
        PadicElem r = *this;
        r.aprec_ = ap;
        r.M_ = need_M(F_, ap - val_);
        BigInt pM = pow_big(F_->p, r.M_);
        for (auto& c : r.u_) c = mod_floor(c, pM);
        // canonical form: clear digits above the precision horizon
        return normalize(F_, r.u_, r.M_, r.val_, ap);
    }

    // Extend the precision window padding with zero digits.  Only sound when
    // the caller knows the result of the surrounding computation does not
    // depend on the padded digits (standard for analytic operations that are
    // 1-Lipschitz beyond the declared precision).
    PadicElem padded_to(long long ap) const {
        if (st_ == St::ExactZero || ap <= aprec_) return *this;
        if (st_ == St::ZeroToPrec) return zero_to_prec(F_, ap);
        PadicElem r = *this;
        r.aprec_ = ap;
        r.M_ = need_M(F_, ap - val_);
        return r;
    }

    // Residue-field image; requires val >= 0.
    ResidueElem residue() const {
        if (val_ < 0) throw NotAUnit("residue of a non-integral element");
        if (st_ != St::Unit || val_ > 0) return F_->res_zero();
        std::vector<long> c(F_->f);
        for (int i = 0; i < F_->f; ++i)
            c[i] = static_cast<long>(mod_floor(u_[F_->idx(i, 0)], F_->p));
        return {F_, c};
    }

    // pi-digit expansion of the unit part: relprec() digits, little-endian,
    // each a kappa element.  Deterministic rendering order.
    std::vector<ResidueElem> unit_digits() const {
        std::vector<ResidueElem> out;
        if (st_ != St::Unit) return out;
        long long rel = relprec();
        const BigInt pM = pow_big(F_->p, M_);
        // digit t = residue of (u - prefix)/pi^t; dividing by pi^t in one shot
        // costs only ceil(t/e) p-digits, which M_ was sized for.
        LocalField::Vec prefix = F_->vec_zero();
        LocalField::Vec pit = F_->vec_one(); // pi^t
        for (long long t = 0; t < rel; ++t) {
            LocalField::Vec diff = F_->vec_sub(u_, prefix, pM);
            long long dv = F_->vec_val(diff, M_);
            if (dv >= std::min<long long>(rel, static_cast<long long>(F_->e) * (M_ - 1))) {
                for (long long s = t; s < rel; ++s) out.push_back(F_->res_zero());
                break;
            }
            if (dv > t) {
                out.push_back(F_->res_zero());
                pit = F_->vec_mul_pi(pit, 1, pM);
                continue;
            }
            int Mo = 0;
            LocalField::Vec shifted = F_->vec_div_pi_pow(diff, t, M_, Mo);
            std::vector<long> c(F_->f);
            for (int i = 0; i < F_->f; ++i)
                c[i] = static_cast<long>(mod_floor(shifted[F_->idx(i, 0)], F_->p));
            ResidueElem d{F_, c};
            out.push_back(d);
            LocalField::Vec rep = F_->vec_mul(F_->res_rep_vec(d), pit, pM);
            prefix = F_->vec_add(prefix, rep, pM);
            pit = F_->vec_mul_pi(pit, 1, pM);
        }
        while (static_cast<long long>(out.size()) < rel) out.push_back(F_->res_zero());
        return out;
    }

    // Digit string "d0,d1,..." (kappa codes), prefixed by valuation: "v|digits".
    std::string to_digit_string() const {
        if (st_ == St::ExactZero) return "0";
        if (st_ == St::ZeroToPrec) return "O(pi^" + std::to_string(aprec_) + ")";
        std::string out = std::to_string(val_) + "|";
        auto ds = unit_digits();
        for (size_t i = 0; i < ds.size(); ++i) {
            if (i) out += ",";
            out += ds[i].encode().str();
        }
        return out;
    }

    // Representational equality (same state, valuation, precision, digits).
    bool same_representation(const PadicElem& o) const {
        return F_ == o.F_ && st_ == o.st_ && val_ == o.val_ && aprec_ == o.aprec_ && u_ == o.u_;
    }

private:
    enum class St { ExactZero, ZeroToPrec, Unit };

    FieldPtr F_;
    St st_ = St::ExactZero;
    long long val_ = kInfVal;
    long long aprec_ = kInfVal;
    LocalField::Vec u_;
    int M_ = 0;

    static long long sat_add(long long a, long long b) {
        if (is_inf(a) || is_inf(b)) return kInfVal;
        long long s = a + b;
        return s >= kInfVal / 2 ? kInfVal : s;
    }

    static int need_M(const FieldPtr& F, long long rel) {
        if (rel < 1) rel = 1;
        long long M = (rel + F->e - 1) / F->e + 1;
        if (M > 100000) throw PrecisionExhausted("requested precision too large");
        return static_cast<int>(M);
    }

    void check_same_field(const PadicElem& o) const {
        if (F_ != o.F_) throw FieldMismatch();
    }

    LocalField::Vec unit_at(int M) const {
        BigInt pM = pow_big(F_->p, M);
        LocalField::Vec v = u_;
        v.resize(F_->vec_zero().size());
        for (auto& c : v) c = mod_floor(c, pM);
        return v;
    }

    // Whole-value vector pi^(val-base) * u at coefficient precision M.
    LocalField::Vec shifted_vec(int M, long long base) const {
        BigInt pM = pow_big(F_->p, M);
        LocalField::Vec v = unit_at(M);
        long long d = val_ - base;
        long long t = d / F_->e, s = d % F_->e;
        v = F_->vec_mul_pi(v, static_cast<int>(s), pM);
        if (t > 0) {
            if (F_->e == 1) {
                BigInt pt = pow_big(F_->p, static_cast<unsigned long>(t));
                for (auto& c : v) c = mod_floor(c * pt, pM);
            } else {
                // multiply by (pi^e)^t = (-(eis tail))^t
                LocalField::Vec pe = F_->vec_zero();
                for (int ss = 0; ss < F_->e; ++ss) pe[F_->idx(0, ss)] = mod_floor(-F_->eis_poly[ss], pM);
                for (long long r = 0; r < t; ++r) v = F_->vec_mul(v, pe, pM);
            }
        }
        return v;
    }

    // Build a normalized element from a raw vector representing x itself
    // (valuation offset `base`), known mod pi^(ap - base) with coefficients
    // exact mod p^M.
    static PadicElem normalize(const FieldPtr& F, LocalField::Vec v, int M, long long base,
                               long long ap) {
        long long rel_known = std::min<long long>(ap - base, static_cast<long long>(F->e) * M);
        long long w = F->vec_val(v, M);
        if (w >= rel_known) return zero_to_prec(F, base + rel_known);
        int Mo = 0;
        LocalField::Vec u = F->vec_div_pi_pow(v, w, M, Mo);
        PadicElem r;
        r.F_ = F;
        r.st_ = St::Unit;
        r.val_ = base + w;
        r.aprec_ = std::min(ap, base + std::min<long long>(rel_known,
                                                           w + static_cast<long long>(F->e) * Mo));
        r.M_ = Mo;
        r.u_ = std::move(u);
        if (r.aprec_ <= r.val_) return zero_to_prec(F, ap);
        return r;
    }
};

// ---------------------------------------------------------------------------
// Convenience: polynomial over K as a coefficient vector (index = degree).
// ---------------------------------------------------------------------------
using PadicPoly = std::vector<PadicElem>;

inline PadicElem poly_eval(const PadicPoly& c, const PadicElem& x) {
    if (c.empty()) return PadicElem::zero(x.field());
    PadicElem r = c.back();
    for (int i = static_cast<int>(c.size()) - 2; i >= 0; --i) r = r * x + c[i];
    return r;
}

inline PadicPoly poly_derivative(const PadicPoly& c) {
    PadicPoly d;
    for (size_t i = 1; i < c.size(); ++i)
        d.push_back(c[i] * PadicElem::from_int(c[i].field(), BigInt(i)));
    if (d.empty() && !c.empty()) d.push_back(PadicElem::zero(c[0].field()));
    return d;
}

// ---------------------------------------------------------------------------
// Root finding in o_K by digit BFS + Newton refinement.  Returns distinct
// roots, ordered by their digit encoding (deterministic).
// ---------------------------------------------------------------------------
struct RootSearchOptions {
    long long target_rel = 0; // 0: field default
    int max_bfs_depth = 40;
    size_t max_candidates = 200000;
};

namespace detail {

inline PadicElem digits_to_elem(const FieldPtr& F, const std::vector<BigInt>& codes,
                                long long aprec) {
    return PadicElem::from_digits(F, codes, 0, aprec);
}

inline std::vector<BigInt> first_digits(const PadicElem& x, int k) {
    std::vector<BigInt> out;
    if (!x.provably_nonzero()) {
        out.assign(k, BigInt(0));
        return out;
    }
    auto ds = x.unit_digits();
    long long v = x.val();
    for (int t = 0; t < k; ++t) {
        long long idx = t - v;
        if (t < v || idx >= static_cast<long long>(ds.size()))
            out.push_back(0);
        else
            out.push_back(ds[static_cast<size_t>(idx)].encode());
    }
    return out;
}

} // namespace detail

inline std::vector<PadicElem> find_integral_roots(const PadicPoly& poly,
                                                  const RootSearchOptions& opt = {}) {
    if (poly.empty()) throw Error("find_integral_roots: empty polynomial");
    const FieldPtr& F = poly[0].field();
    long long target = opt.target_rel > 0 ? opt.target_rel : F->default_prec;
    PadicPoly deriv = poly_derivative(poly);

    // BFS over digit prefixes.  A prefix of depth j is a solution mod pi^(j+1);
    // once the Hensel criterion v(f) > 2 v(f') holds, Newton takes over.  The
    // prefix keeps branching unless the Newton ball B(x, |f/f'|) covers the
    // whole prefix cylinder, since other roots may share the prefix.
    struct Cand {
        std::vector<BigInt> digits;
    };
    struct Seed {
        PadicElem x;
        long long ball; // v-exponent of the certified unique-root ball, kInfVal if none
    };
    std::vector<Cand> level{{std::vector<BigInt>{}}};
    std::vector<Seed> newton_seeds;
    std::vector<Seed> exact_hits; // zero-extensions that are roots outright
    BigInt qq = F->q;
    const long long pad = target + 8;

    for (int depth = 0; depth < opt.max_bfs_depth && !level.empty(); ++depth) {
        std::vector<Cand> next;
        for (const auto& c : level) {
            for (BigInt code = 0; code < qq; ++code) {
                Cand c2 = c;
                c2.digits.push_back(code);
                PadicElem x = detail::digits_to_elem(F, c2.digits, pad);
                PadicElem fx = poly_eval(poly, x);
                if (!fx.provably_nonzero()) {
                    // zero-extension is a root to available precision; keep
                    // branching while digits are still resolvable, record and
                    // stop once the cylinder falls below the precision horizon
                    if (depth + 1 >= fx.aprec())
                        exact_hits.push_back({x, kInfVal});
                    else
                        next.push_back(std::move(c2));
                } else {
                    long long vf = fx.val();
                    if (vf < depth + 1) continue;
                    PadicElem dfx = poly_eval(deriv, x);
                    long long vdf = dfx.provably_nonzero() ? dfx.val() : kInfVal;
                    bool hensel = !is_inf(vdf) && vf > 2 * vdf;
                    if (hensel) newton_seeds.push_back({x, vf - vdf});
                    bool ball_covers_cylinder =
                        hensel && (vf - vdf <= static_cast<long long>(depth) + 1);
                    if (!ball_covers_cylinder) next.push_back(std::move(c2));
                }
                if (next.size() + newton_seeds.size() > opt.max_candidates)
                    throw PrecisionExhausted("root search: candidate explosion");
            }
        }
        level = std::move(next);
    }
    for (const auto& c : level) {
        // prefixes that survived to the depth cap must be (within precision)
        // roots themselves, else the search is inconclusive
        PadicElem x = detail::digits_to_elem(F, c.digits, pad);
        PadicElem fx = poly_eval(poly, x);
        if (fx.provably_nonzero())
            throw PrecisionExhausted("root search: BFS depth exhausted before Hensel criterion");
        exact_hits.push_back({x, kInfVal});
    }
    for (auto& s : exact_hits) newton_seeds.push_back(std::move(s));

    // Newton refinement and deduplication.  Root existence was certified by
    // the Hensel criterion at the seed (or by an indistinguishable-from-zero
    // evaluation); Newton only sharpens the digits, losing v(f') of absolute
    // precision per division, so the final sanity check runs at whatever
    // precision survives.
    struct Root {
        PadicElem x;
        long long ball;
    };
    std::vector<Root> roots;
    for (const Seed& seed : newton_seeds) {
        PadicElem x = seed.x;
        bool ok = false;
        for (int it = 0; it < 64; ++it) {
            PadicElem fx = poly_eval(poly, x);
            if (!fx.provably_nonzero()) {
                ok = true;
                break;
            }
            PadicElem dfx = poly_eval(deriv, x);
            if (!dfx.provably_nonzero()) break;
            PadicElem step = fx / dfx;
            x = x - step;
            if (step.val() >= target + 4) {
                PadicElem chk = poly_eval(poly, x);
                ok = !chk.provably_nonzero();
                break;
            }
        }
        if (!ok) continue;
        // two refined roots are the same when their difference is
        // indistinguishable from zero, or when one lies inside the other's
        // certified Hensel ball (which holds a unique root)
        bool dup = false;
        for (const auto& r : roots) {
            PadicElem d = r.x - x;
            long long rho = -1;
            if (!is_inf(r.ball)) rho = std::max(rho, r.ball);
            if (!is_inf(seed.ball)) rho = std::max(rho, seed.ball);
            if (!d.provably_nonzero() || (rho >= 0 && d.val() >= rho)) {
                dup = true;
                break;
            }
        }
        if (!dup) roots.push_back({x, seed.ball});
    }
    std::vector<PadicElem> out;
    out.reserve(roots.size());
    for (auto& r : roots) out.push_back(std::move(r.x));
    std::sort(out.begin(), out.end(), [&](const PadicElem& a, const PadicElem& b) {
        auto da = detail::first_digits(a, 24), db = detail::first_digits(b, 24);
        return da < db;
    });
    return out;
}

// ---------------------------------------------------------------------------
// [OP] padic_log / padic_exp
// ---------------------------------------------------------------------------
inline PadicElem padic_log(const PadicElem& a) {
    const FieldPtr& F = a.field();
    PadicElem z = a - PadicElem::from_int_rel(F, 1, std::max<long long>(a.relprec(),
                                                                        F->default_prec));
    if (z.is_exact_zero()) return PadicElem::zero(F);
    long long vz = z.provably_nonzero() ? z.val() : z.aprec();
    // domain: v(a-1) > e/(p-1)
    if (!(vz * (F->p - 1) > F->e))
        throw ConvergenceDomain("padic_log: v(a-1) <= e/(p-1)");
    if (!z.provably_nonzero()) return PadicElem::zero_to_prec(F, z.aprec());
    long long N = is_inf(z.aprec()) ? F->default_prec : z.aprec();
    // term count: need k*vz - e*log_p(k) >= N for all k beyond kmax
    auto ilogp = [&](long long k) {
        long long l = 0;
        while (k >= F->p) {
            k /= F->p;
            ++l;
        }
        return l;
    };
    long long kmax = N / vz + 2;
    while (kmax * vz - F->e * (ilogp(kmax) + 1) < N) ++kmax;
    long long pad = N + 2 * F->e * (vp_of(BigInt(kmax), F->p, 60) + 8);
    PadicElem zz = z.padded_to(z.val() + pad);
    PadicElem acc = PadicElem::zero(F);
    PadicElem zpow = PadicElem::from_int_rel(F, 1, pad);
    for (long long k = 1; k <= kmax; ++k) {
        zpow = zpow * zz;
        PadicElem term = zpow / PadicElem::from_int_rel(F, BigInt(k), pad);
        if (k % 2 == 0) term = -term;
        acc = acc + term;
        if (zpow.provably_nonzero() && k * vz > N + F->e * 64) break;
    }
    return acc.reduced_to(N);
}

inline PadicElem padic_exp(const PadicElem& a) {
    const FieldPtr& F = a.field();
    if (a.is_exact_zero()) return PadicElem::from_int(F, 1);
    long long va = a.provably_nonzero() ? a.val() : a.aprec();
    if (!(va * (F->p - 1) > F->e))
        throw ConvergenceDomain("padic_exp: v(a) <= e/(p-1)");
    long long N = a.aprec() == kInfVal ? F->default_prec : a.aprec();
    if (!a.provably_nonzero()) {
        // exp(0 + O(pi^N)) = 1 + O(pi^N)
        return PadicElem::from_int_rel(F, 1, N);
    }
    long long delta = va * (F->p - 1) - F->e; // >= 1
    long long kmax = ((F->p - 1) * (N + 1)) / delta + 4;
    // guard digits for the k! divisions
    long long vkfact = (kmax) / (F->p - 1) + 4;
    long long pad = N + F->e * vkfact + 8;
    PadicElem aa = a.padded_to(a.val() + pad);
    PadicElem acc = PadicElem::from_int_rel(F, 1, pad);
    PadicElem term = PadicElem::from_int_rel(F, 1, pad);
    for (long long k = 1; k <= kmax; ++k) {
        term = term * aa / PadicElem::from_int_rel(F, BigInt(k), pad);
        acc = acc + term;
        if (term.provably_nonzero() && term.val() > N + F->e * 4 && k > 2) break;
        if (!term.provably_nonzero()) break;
    }
    return acc.reduced_to(N);
}

// ---------------------------------------------------------------------------
// [OP] teichmuller_lift: the unique (q-1)-st root of unity congruent to r.
// ---------------------------------------------------------------------------
inline PadicElem teichmuller_lift(const ResidueElem& r, long long rel_prec = 0) {
    const FieldPtr& F = r.field();
    bool zero_r = std::all_of(r.coeffs().begin(), r.coeffs().end(), [](long x) { return x == 0; });
    if (zero_r) throw NotAUnit("teichmuller_lift of zero");
    long long rel = rel_prec > 0 ? rel_prec : F->default_prec;
    PadicElem x = PadicElem::from_res_rep(F, r, rel + 4);
    // x <- x^q converges to the Teichmueller representative
    for (long long it = 0; it < rel + 64; ++it) {
        PadicElem y = x.pow(F->q);
        PadicElem d = y - x;
        x = y;
        if (!d.provably_nonzero() || d.val() >= rel + 2) break;
    }
    return x.reduced_to(rel);
}

// ---------------------------------------------------------------------------
// [OP] mult_order_in_residue: order of the residue image in kappa^*.
// ---------------------------------------------------------------------------
inline BigInt mult_order_in_residue(const PadicElem& a) {
    if (!a.provably_nonzero() || a.val() != 0) throw NotAUnit("mult_order_in_residue");
    ResidueElem r = a.residue();
    const FieldPtr& F = a.field();
    BigInt order = F->q - 1;
    for (const auto& [prime, mult] : factorize(F->q - 1)) {
        for (int it = 0; it < mult; ++it) {
            BigInt cand = order / prime;
            if (r.pow(cand) == F->res_one())
                order = cand;
            else
                break;
        }
    }
    return order;
}

// ---------------------------------------------------------------------------
// [OP] nth_root: r with r^n = a, by digit search + Hensel lift; deterministic
// smallest-residue choice.  NoRootInField when no lift exists over K.
// ---------------------------------------------------------------------------
inline PadicElem nth_root(const PadicElem& a, long n) {
    if (n <= 0) throw Error("nth_root: n must be positive");
    if (!a.provably_nonzero()) throw PrecisionExhausted("nth_root of an indistinguishable zero");
    const FieldPtr& F = a.field();
    if (n == 1) return a;
    if (a.val() % n != 0) throw NoRootInField("valuation not divisible by n");
    PadicElem unit = a.shifted(-a.val());
    // roots of x^n - unit
    PadicPoly poly(static_cast<size_t>(n) + 1, PadicElem::zero(F));
    poly[0] = -unit;
    poly[static_cast<size_t>(n)] = PadicElem::from_int_rel(F, 1, unit.relprec());
    RootSearchOptions opt;
    opt.max_bfs_depth = 2 * F->e * static_cast<int>(vp_of(BigInt(n), F->p, 30)) + 4;
    auto roots = find_integral_roots(poly, opt);
    if (roots.empty()) throw NoRootInField("x^" + std::to_string(n) + " = a has no root in K");
    return roots.front().shifted(a.val() / n);
}

// ---------------------------------------------------------------------------
// [OP] count_roots_of_unity: #mu(K) = (q-1) p^t.
// ---------------------------------------------------------------------------
inline BigInt count_roots_of_unity(const FieldPtr& F) {
    BigInt tame = F->q - 1;
    BigInt wild = 1;
    long long phi = F->p - 1; // phi(p^s) for s = 1
    for (int s = 1;; ++s) {
        // mu_{p^s} subset K forces phi(p^s) | e (totally ramified subextension)
        if (phi == 0 || F->e % phi != 0) break;
        PadicPoly poly;
        BigInt ps = pow_big(F->p, s);
        size_t deg = static_cast<size_t>(ps);
        if (deg > 4096) break;
        // generous coefficient precision: every Newton division by f' costs
        // v(p^s) = e*s digits, so the count needs slack well beyond target
        long long rel = 2LL * F->default_prec + 64LL * F->e * s;
        poly.assign(deg + 1, PadicElem::zero(F));
        poly[0] = PadicElem::from_int_rel(F, -1, rel);
        poly[deg] = PadicElem::from_int_rel(F, 1, rel);
        RootSearchOptions opt;
        opt.max_bfs_depth = 2 * F->e * s + 6;
        opt.target_rel = std::min<long long>(F->default_prec, 32);
        auto roots = find_integral_roots(poly, opt);
        if (BigInt(roots.size()) == ps)
            wild = ps;
        else
            break;
        phi *= F->p;
    }
    return tame * wild;
}

} // namespace padicdyn
