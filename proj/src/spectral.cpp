#include "hmp/spectral.hpp"

#include <stdexcept>

#include "hmp/arith.hpp"

namespace hmp {

namespace {

// Rational polynomials (ascending, trimmed) for the Sturm chain only.
using RatPoly = std::vector<Rat>;

void trim(RatPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

RatPoly to_rat(const IntPolynomial& p) {
    RatPoly r(p.coeffs().size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = Rat(p.coeffs()[i]);
    return r;
}

Rat eval(const RatPoly& p, const Rat& x) {
    Rat r = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * x + *it;
    return r;
}

RatPoly deriv(const RatPoly& p) {
    if (p.size() <= 1) return {};
    RatPoly r(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) r[i - 1] = p[i] * Rat(static_cast<long>(i));
    return r;
}

// Scale by a positive rational so the coefficients become a primitive
// integer vector; keeps Sturm signs intact and sizes small.
void normalize_positive(RatPoly& p) {
    if (p.empty()) return;
    Int den_lcm = 1;
    for (const Rat& c : p) den_lcm = int_lcm(den_lcm, Int(c.get_den()));
    Int num_gcd = 0;
    for (const Rat& c : p) num_gcd = int_gcd(num_gcd, Int(c.get_num() * den_lcm / c.get_den()));
    if (num_gcd == 0) return;
    const Rat scale = make_rat(den_lcm, num_gcd);
    for (Rat& c : p) c *= scale;
}

// Remainder of a modulo b over Q (deg b >= 0, b nonzero).
RatPoly rat_rem(RatPoly a, const RatPoly& b) {
    while (a.size() >= b.size() && !a.empty()) {
        const Rat factor = a.back() / b.back();
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
        a.pop_back();
        trim(a);
    }
    return a;
}

// Divide by (x - root); the caller guarantees root is a root.
RatPoly deflate(const RatPoly& p, const Rat& root) {
    RatPoly q(p.size() - 1);
    Rat carry = 0;
    for (std::size_t i = p.size(); i-- > 1;) {
        carry = p[i] + carry * root;
        q[i - 1] = carry;
    }
    return q;
}

int sign_of(const Rat& x) { return sgn(x); }

long sign_changes(const std::vector<RatPoly>& chain, const Rat& t) {
    long changes = 0;
    int prev = 0;
    for (const RatPoly& p : chain) {
        const int s = sign_of(eval(p, t));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

}  // namespace

long sturm_count(const IntPolynomial& q, const Rat& a, const Rat& b) {
    if (q.is_zero()) throw std::invalid_argument("sturm_count: zero polynomial");
    if (a > b) throw std::invalid_argument("sturm_count: interval endpoints out of order");

    // Squarefree part (Gauss: the primitive gcd divides over Z).
    const IntPolynomial g = poly_gcd(q, q.derivative());
    auto sf = try_divide_exact(q, g);
    if (!sf) throw std::logic_error("sturm_count: squarefree reduction failed");
    RatPoly p = to_rat(*sf);

    if (a == b) return eval(p, a) == 0 ? 1 : 0;

    long count = 0;
    if (eval(p, a) == 0) {
        ++count;
        p = deflate(p, a);
    }
    if (eval(p, b) == 0) {
        ++count;
        p = deflate(p, b);
    }
    if (p.size() <= 1) return count;

    std::vector<RatPoly> chain;
    chain.push_back(p);
    chain.push_back(deriv(p));
    normalize_positive(chain.back());
    while (chain.back().size() > 0) {
        RatPoly next = rat_rem(chain[chain.size() - 2], chain.back());
        for (Rat& c : next) c = -c;
        normalize_positive(next);
        if (next.empty()) break;
        chain.push_back(std::move(next));
    }
    count += sign_changes(chain, a) - sign_changes(chain, b);
    return count;
}

UnitCircleAnalysis unit_circle_analysis(const IntPolynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("unit_circle_analysis: zero polynomial");
    UnitCircleAnalysis res;
    IntPolynomial body = p.strip_zero_roots().second;  // roots at 0 are off-circle
    if (body.degree() == 0) return res;
    res.has_eigenvalue_one = body.eval(Int(1)) == 0;

    // All modulus-1 roots live in gcd(p, reverse(p)): the root set of an
    // integer polynomial is stable under conjugation, and on the circle
    // 1/root = conjugate(root).
    IntPolynomial s = poly_gcd(body, body.reversed());

    if (s.degree() >= 1) {
        const unsigned long n = static_cast<unsigned long>(s.degree());
        const unsigned long dmax = 2 * n * n + 2;  // totient(d) <= n forces d <= 2n^2
        for (unsigned long d = 2; d <= dmax && s.degree() >= 1; ++d) {
            if (totient(d) > static_cast<unsigned long>(s.degree())) continue;
            const IntPolynomial phi = cyclotomic(d);
            unsigned mult = 0;
            while (true) {
                auto quo = try_divide_exact(s, phi);
                if (!quo) break;
                s = std::move(*quo);
                ++mult;
            }
            if (mult) res.cyclotomic_factors.push_back({d, mult});
        }
    }

    // Residual: whatever is left of the reciprocal part. Strip roots at
    // +-1 (possible for +1 only, since the d = 2 factor is gone); they are
    // roots of unity, already reported above, not residual. Then use the
    // substitution y = x + 1/x and count roots of the transformed
    // polynomial in [-2, 2].
    IntPolynomial r = s;
    const IntPolynomial x_minus_1{-1, 1}, x_plus_1{1, 1};
    while (r.degree() >= 1 && r.eval(Int(1)) == 0) r = *try_divide_exact(r, x_minus_1);
    while (r.degree() >= 1 && r.eval(Int(-1)) == 0) r = *try_divide_exact(r, x_plus_1);
    if (r.degree() >= 1) {
        if (r.reversed() != r || r.degree() % 2 != 0)
            throw std::logic_error("unit_circle_analysis: residual is not reciprocal");
        const std::size_t h = static_cast<std::size_t>(r.degree()) / 2;
        // z_j(y) = x^j + x^-j on |x| = 1: z_0 = 2, z_1 = y, z_{j+1} = y z_j - z_{j-1}.
        IntPolynomial zprev{2}, z{0, 1};
        IntPolynomial q(std::vector<Int>{r.coeff(h)});
        const IntPolynomial y{0, 1};
        for (std::size_t j = 1; j <= h; ++j) {
            q = q + z.scaled(r.coeff(h + j));
            if (j < h) {
                IntPolynomial znext = y * z - zprev;
                zprev = std::move(z);
                z = std::move(znext);
            }
        }
        if (sturm_count(q, Rat(-2), Rat(2)) > 0) res.residual_unit_circle_roots = true;
    }
    return res;
}

SpectralReport check_conditions(const IntMatrix& d) {
    SpectralReport r;
    r.det_value = det(d);
    const UnitCircleAnalysis uca = unit_circle_analysis(char_poly(d));
    r.has_eigenvalue_one = uca.has_eigenvalue_one;
    r.cyclotomic_factors = uca.cyclotomic_factors;
    r.residual_unit_circle_roots = uca.residual_unit_circle_roots;
    r.cond1 = !r.has_eigenvalue_one && !r.residual_unit_circle_roots;
    r.cond2 = r.det_value != 0 && r.det_value != 1 && r.det_value != -1;
    std::string w;
    if (r.has_eigenvalue_one) w += "eigenvalue 1 present";
    if (r.residual_unit_circle_roots) {
        if (!w.empty()) w += "; ";
        w += "unit-circle eigenvalue outside the listed cyclotomic factors";
    }
    if (!r.cond2) {
        if (!w.empty()) w += "; ";
        w += "det = " + r.det_value.get_str() + " lies in {0, 1, -1}";
    }
    if (w.empty()) w = "conditions (1) and (2) hold";
    r.witness = std::move(w);
    return r;
}

Json report_to_json(const SpectralReport& r) {
    Json j;
    j["det_value"] = int_to_json(r.det_value);
    j["has_eigenvalue_one"] = r.has_eigenvalue_one;
    Json factors = Json::array();
    for (const auto& f : r.cyclotomic_factors)
        factors.push_back(Json::array({f.d, f.multiplicity}));
    j["cyclotomic_factors"] = std::move(factors);
    j["residual_unit_circle_roots"] = r.residual_unit_circle_roots;
    j["cond1"] = r.cond1;
    j["cond2"] = r.cond2;
    j["witness"] = r.witness;
    return j;
}

}  // namespace hmp
