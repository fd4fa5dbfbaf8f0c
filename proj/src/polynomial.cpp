#include "hmp/polynomial.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

#include "hmp/arith.hpp"

namespace hmp {

IntPolynomial::IntPolynomial(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
    c_.reserve(coeffs.size());
    for (long v : coeffs) c_.emplace_back(v);
    trim();
}

IntPolynomial IntPolynomial::monomial(const Int& c, std::size_t n) {
    if (c == 0) return {};
    IntPolynomial p;
    p.c_.assign(n + 1, Int(0));
    p.c_[n] = c;
    return p;
}

void IntPolynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Int IntPolynomial::leading() const {
    if (is_zero()) throw std::invalid_argument("leading: zero polynomial");
    return c_.back();
}

Int IntPolynomial::eval(const Int& x) const {
    Int r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

Rat IntPolynomial::eval(const Rat& x) const {
    Rat r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + Rat(*it);
    return r;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
    std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
    std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Int> r(c_.size() + o.c_.size() - 1, Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator-() const {
    std::vector<Int> r(c_);
    for (auto& v : r) v = -v;
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::scaled(const Int& c) const {
    if (c == 0) return {};
    std::vector<Int> r(c_);
    for (auto& v : r) v *= c;
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Int> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Int(static_cast<long>(i));
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::reversed() const {
    std::vector<Int> r(c_.rbegin(), c_.rend());
    return IntPolynomial(std::move(r));
}

std::pair<unsigned, IntPolynomial> IntPolynomial::strip_zero_roots() const {
    if (is_zero()) return {0U, {}};
    std::size_t v = 0;
    while (c_[v] == 0) ++v;
    return {static_cast<unsigned>(v),
            IntPolynomial(std::vector<Int>(c_.begin() + static_cast<long>(v), c_.end()))};
}

Int IntPolynomial::content() const {
    Int g = 0;
    for (const auto& v : c_) g = int_gcd(g, v);
    return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
    if (is_zero()) return {};
    Int g = content();
    if (c_.back() < 0) g = -g;
    std::vector<Int> r(c_);
    for (auto& v : r) v = divexact(v, g);
    return IntPolynomial(std::move(r));
}

std::string IntPolynomial::str() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i];
    os << ']';
    return os.str();
}

std::optional<IntPolynomial> try_divide_exact(const IntPolynomial& num,
                                              const IntPolynomial& den) {
    if (den.is_zero()) throw std::invalid_argument("try_divide_exact: zero divisor");
    if (num.is_zero()) return IntPolynomial{};
    if (num.degree() < den.degree()) return std::nullopt;
    const std::size_t dn = static_cast<std::size_t>(num.degree());
    const std::size_t dd = static_cast<std::size_t>(den.degree());
    std::vector<Rat> rem(dn + 1);
    for (std::size_t i = 0; i <= dn; ++i) rem[i] = Rat(num.coeff(i));
    const Rat lead(den.leading());
    std::vector<Rat> q(dn - dd + 1);
    for (std::size_t i = dn + 1; i-- > dd;) {
        Rat c = rem[i] / lead;
        q[i - dd] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= dd; ++j) rem[i - dd + j] -= c * Rat(den.coeff(j));
    }
    for (std::size_t i = 0; i < dd; ++i)
        if (rem[i] != 0) return std::nullopt;
    std::vector<Int> qi(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) {
        if (q[i].get_den() != 1) return std::nullopt;
        qi[i] = q[i].get_num();
    }
    return IntPolynomial(std::move(qi));
}

namespace {

// One pseudo-reduction pass: returns a polynomial proportional to the
// remainder of a by b (scaled by powers of b's leading coefficient).
IntPolynomial pseudo_rem(IntPolynomial a, const IntPolynomial& b) {
    const Int lb = b.leading();
    while (!a.is_zero() && a.degree() >= b.degree()) {
        const std::size_t shift = static_cast<std::size_t>(a.degree() - b.degree());
        IntPolynomial t = IntPolynomial::monomial(a.leading(), shift) * b;
        a = a.scaled(lb) - t;
    }
    return a;
}

}  // namespace

IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero()) return b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    IntPolynomial x = a.primitive_part();
    IntPolynomial y = b.primitive_part();
    if (x.degree() < y.degree()) std::swap(x, y);
    while (!y.is_zero()) {
        IntPolynomial r = pseudo_rem(x, y).primitive_part();
        x = std::move(y);
        y = std::move(r);
    }
    return x.primitive_part();
}

IntPolynomial cyclotomic(unsigned long d) {
    if (d == 0) throw std::invalid_argument("cyclotomic: d must be >= 1");
    std::map<unsigned long, IntPolynomial> phi;
    for (unsigned long e : divisors(d)) {
        // x^e - 1 divided by all earlier cyclotomic factors.
        std::vector<Int> c(e + 1, Int(0));
        c[0] = -1;
        c[e] = 1;
        IntPolynomial q{std::move(c)};
        for (const auto& [f, pf] : phi) {
            if (e % f) continue;
            auto div = try_divide_exact(q, pf);
            if (!div) throw std::logic_error("cyclotomic: inexact division");
            q = std::move(*div);
        }
        phi.emplace(e, std::move(q));
    }
    return phi.at(d);
}

IntPolynomial char_poly(const IntMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("char_poly: non-square matrix");
    const std::size_t n = m.rows();
    std::vector<Int> c(n + 1, Int(0));
    c[n] = 1;
    if (n == 0) return IntPolynomial(std::move(c));
    // Faddeev-LeVerrier; every division is exact over Z.
    IntMatrix b = m;
    c[n - 1] = -trace(b);
    for (std::size_t k = 2; k <= n; ++k) {
        IntMatrix shifted = b;
        for (std::size_t i = 0; i < n; ++i) shifted(i, i) += c[n - k + 1];
        b = m * shifted;
        Int t = trace(b);
        if (!divisible(t, Int(static_cast<long>(k))))
            throw std::logic_error("char_poly: inexact trace division");
        c[n - k] = -divexact(t, Int(static_cast<long>(k)));
    }
    return IntPolynomial(std::move(c));
}

}  // namespace hmp
