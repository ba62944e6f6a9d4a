#include "qsing/poly.hpp"

#include <algorithm>
#include <set>

#include <boost/multiprecision/cpp_int.hpp>

namespace qsing {

using boost::multiprecision::abs;
using boost::multiprecision::gcd;
using boost::multiprecision::lcm;
using boost::multiprecision::powm;

SparsePoly SparsePoly::constant(const Rat& c) {
    SparsePoly p;
    p.add_term(0, 0, c);
    return p;
}

SparsePoly SparsePoly::variable_x() { return monomial(1, 0, Rat(1)); }
SparsePoly SparsePoly::variable_y() { return monomial(0, 1, Rat(1)); }

SparsePoly SparsePoly::monomial(long long i, long long j, const Rat& c) {
    SparsePoly p;
    p.add_term(i, j, c);
    return p;
}

bool SparsePoly::is_constant() const {
    return c_.empty() || (c_.size() == 1 && c_.begin()->first == Exp{0, 0});
}

Rat SparsePoly::coeff(long long i, long long j) const {
    auto it = c_.find({i, j});
    return it == c_.end() ? Rat(0) : it->second;
}

void SparsePoly::add_term(long long i, long long j, const Rat& v) {
    if (v == 0) return;
    if (i < 0 || j < 0) throw std::invalid_argument("SparsePoly: negative exponent");
    auto [it, fresh] = c_.try_emplace({i, j}, v);
    if (!fresh) {
        it->second += v;
        if (it->second == 0) c_.erase(it);
    }
}

long long SparsePoly::degree() const {
    long long d = -1;
    for (const auto& [e, c] : c_) d = std::max(d, e.first + e.second);
    return d;
}

long long SparsePoly::degree_x() const {
    long long d = -1;
    for (const auto& [e, c] : c_) d = std::max(d, e.first);
    return d;
}

long long SparsePoly::degree_y() const {
    long long d = -1;
    for (const auto& [e, c] : c_) d = std::max(d, e.second);
    return d;
}

SparsePoly SparsePoly::operator+(const SparsePoly& o) const {
    SparsePoly r = *this;
    for (const auto& [e, c] : o.c_) r.add_term(e.first, e.second, c);
    return r;
}

SparsePoly SparsePoly::operator-(const SparsePoly& o) const {
    SparsePoly r = *this;
    for (const auto& [e, c] : o.c_) r.add_term(e.first, e.second, -c);
    return r;
}

SparsePoly SparsePoly::operator-() const {
    SparsePoly r;
    for (const auto& [e, c] : c_) r.c_[e] = -c;
    return r;
}

SparsePoly SparsePoly::operator*(const SparsePoly& o) const {
    SparsePoly r;
    for (const auto& [e1, c1] : c_)
        for (const auto& [e2, c2] : o.c_)
            r.add_term(e1.first + e2.first, e1.second + e2.second, c1 * c2);
    return r;
}

SparsePoly SparsePoly::operator*(const Rat& c) const {
    SparsePoly r;
    if (c == 0) return r;
    for (const auto& [e, v] : c_) r.c_[e] = v * c;
    return r;
}

SparsePoly SparsePoly::pow(long long e) const {
    if (e < 0) throw std::invalid_argument("SparsePoly::pow: negative exponent");
    SparsePoly acc = constant(Rat(1));
    SparsePoly base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

SparsePoly SparsePoly::dx() const {
    SparsePoly r;
    for (const auto& [e, c] : c_)
        if (e.first > 0) r.add_term(e.first - 1, e.second, c * Rat(e.first));
    return r;
}

SparsePoly SparsePoly::dy() const {
    SparsePoly r;
    for (const auto& [e, c] : c_)
        if (e.second > 0) r.add_term(e.first, e.second - 1, c * Rat(e.second));
    return r;
}

Rat SparsePoly::evaluate(const Rat& x, const Rat& y) const {
    std::map<long long, Rat> xp{{0, Rat(1)}}, yp{{0, Rat(1)}};
    auto power = [](std::map<long long, Rat>& cache, const Rat& v, long long e) {
        auto it = cache.lower_bound(e);
        if (it != cache.end() && it->first == e) return it->second;
        --it;
        Rat r = it->second;
        for (long long k = it->first; k < e; ++k) r *= v;
        cache[e] = r;
        return r;
    };
    Rat acc = 0;
    for (const auto& [e, c] : c_) acc += c * power(xp, x, e.first) * power(yp, y, e.second);
    return acc;
}

SparsePoly SparsePoly::compose(const SparsePoly& q, const SparsePoly& r) const {
    std::vector<SparsePoly> qp{constant(Rat(1))}, rp{constant(Rat(1))};
    long long mi = std::max<long long>(degree_x(), 0);
    long long mj = std::max<long long>(degree_y(), 0);
    for (long long k = 1; k <= mi; ++k) qp.push_back(qp.back() * q);
    for (long long k = 1; k <= mj; ++k) rp.push_back(rp.back() * r);
    SparsePoly acc;
    for (const auto& [e, c] : c_)
        acc = acc + qp[static_cast<std::size_t>(e.first)] * rp[static_cast<std::size_t>(e.second)] * c;
    return acc;
}

std::string SparsePoly::to_string() const {
    if (c_.empty()) return "0";
    std::string out;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rat a = c;
        if (out.empty()) {
            if (a < 0) { out += "-"; a = -a; }
        } else {
            out += a < 0 ? " - " : " + ";
            if (a < 0) a = -a;
        }
        std::string mono;
        if (e.first > 0) mono += e.first == 1 ? "x" : "x^" + std::to_string(e.first);
        if (e.second > 0) {
            if (!mono.empty()) mono += "*";
            mono += e.second == 1 ? "y" : "y^" + std::to_string(e.second);
        }
        if (mono.empty()) out += qsing::to_string(a);
        else if (a == 1) out += mono;
        else out += qsing::to_string(a) + "*" + mono;
    }
    return out;
}

namespace {

struct Parser {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t' || s[pos] == '\n' || s[pos] == '\r'))
            ++pos;
    }
    bool at_end() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    [[noreturn]] void fail(std::size_t at, const std::string& msg) { throw parse_error(at + 1, msg); }

    bool starts_base() {
        char c = peek();
        return (c >= '0' && c <= '9') || c == 'x' || c == 'y' || c == '(';
    }

    Int parse_digits() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
        if (pos == start) fail(start, "expected a number");
        return Int(s.substr(start, pos - start));
    }

    SparsePoly parse_base() {
        char c = peek();
        if (c >= '0' && c <= '9') return SparsePoly::constant(Rat(parse_digits()));
        if (c == 'x') { ++pos; return SparsePoly::variable_x(); }
        if (c == 'y') { ++pos; return SparsePoly::variable_y(); }
        if (c == '(') {
            ++pos;
            SparsePoly inner = parse_expr();
            if (peek() != ')') fail(pos, "missing closing parenthesis");
            ++pos;
            return inner;
        }
        fail(pos, "expected a number, variable or parenthesized expression");
    }

    SparsePoly parse_factor() {
        if (peek() == '-') {
            ++pos;
            return -parse_factor();
        }
        SparsePoly b = parse_base();
        if (peek() == '^') {
            std::size_t at = pos;
            ++pos;
            Int e = parse_digits();
            if (e > 4096) fail(at, "exponent too large");
            b = b.pow(to_int64(e));
        }
        return b;
    }

    SparsePoly parse_term() {
        SparsePoly acc = parse_factor();
        for (;;) {
            char c = peek();
            if (c == '*') {
                ++pos;
                acc = acc * parse_factor();
            } else if (c == '/') {
                std::size_t at = pos;
                ++pos;
                SparsePoly d = parse_factor();
                if (!d.is_constant()) fail(at, "divisor must be a nonzero constant");
                Rat v = d.coeff(0, 0);
                if (v == 0) fail(at, "division by zero");
                acc = acc * (Rat(1) / v);
            } else if (starts_base()) {
                acc = acc * parse_factor();
            } else {
                break;
            }
        }
        return acc;
    }

    SparsePoly parse_expr() {
        SparsePoly acc = parse_term();
        for (;;) {
            char c = peek();
            if (c == '+') {
                ++pos;
                acc = acc + parse_term();
            } else if (c == '-') {
                ++pos;
                acc = acc - parse_term();
            } else {
                break;
            }
        }
        return acc;
    }
};

} // namespace

SparsePoly parse_poly(const std::string& text) {
    Parser p{text};
    if (p.at_end()) throw parse_error(1, "empty polynomial");
    SparsePoly r = p.parse_expr();
    if (!p.at_end()) p.fail(p.pos, "unexpected character");
    return r;
}

UPoly::UPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

void UPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rat UPoly::coeff(long long k) const {
    if (k < 0 || k >= static_cast<long long>(c_.size())) return Rat(0);
    return c_[static_cast<std::size_t>(k)];
}

Rat UPoly::lead() const {
    if (c_.empty()) throw std::domain_error("UPoly::lead: zero polynomial");
    return c_.back();
}

bool UPoly::is_monomial() const {
    std::size_t nz = 0;
    for (const Rat& c : c_) nz += (c != 0);
    return nz == 1;
}

UPoly UPoly::operator+(const UPoly& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return UPoly(std::move(r));
}

UPoly UPoly::operator-(const UPoly& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return UPoly(std::move(r));
}

UPoly UPoly::operator*(const UPoly& o) const {
    if (c_.empty() || o.c_.empty()) return UPoly();
    std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            r[i + j] += c_[i] * o.c_[j];
    return UPoly(std::move(r));
}

UPoly UPoly::operator*(const Rat& c) const {
    if (c == 0) return UPoly();
    std::vector<Rat> r = c_;
    for (Rat& v : r) v *= c;
    return UPoly(std::move(r));
}

UPoly UPoly::pow(long long e) const {
    if (e < 0) throw std::invalid_argument("UPoly::pow: negative exponent");
    UPoly acc = one();
    UPoly base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& d) const {
    if (d.is_zero()) throw std::invalid_argument("UPoly::divmod: division by zero");
    std::vector<Rat> rem = c_;
    long long dd = d.degree();
    std::vector<Rat> q;
    if (degree() >= dd) q.assign(static_cast<std::size_t>(degree() - dd) + 1, Rat(0));
    while (static_cast<long long>(rem.size()) - 1 >= dd) {
        while (!rem.empty() && rem.back() == 0) rem.pop_back();
        long long rd = static_cast<long long>(rem.size()) - 1;
        if (rd < dd) break;
        Rat f = rem.back() / d.lead();
        std::size_t shift = static_cast<std::size_t>(rd - dd);
        q[shift] = f;
        for (std::size_t i = 0; i < d.c_.size(); ++i) rem[shift + i] -= f * d.c_[i];
    }
    return {UPoly(std::move(q)), UPoly(std::move(rem))};
}

UPoly UPoly::derivative() const {
    if (c_.size() <= 1) return UPoly();
    std::vector<Rat> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rat(i);
    return UPoly(std::move(r));
}

Rat UPoly::evaluate(const Rat& t) const {
    Rat acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

UPoly UPoly::monic() const {
    if (is_zero()) return UPoly();
    return *this * (Rat(1) / lead());
}

UPoly UPoly::gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
        UPoly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

UPoly UPoly::squarefree_part() const {
    if (is_zero()) return UPoly();
    if (degree() == 0) return one();
    UPoly g = gcd(*this, derivative());
    return divmod(g).first.monic();
}

namespace {

// Deterministic Miller-Rabin for odd n below 3.3e24 with the standard
// twelve-prime base set.
bool mr_composite_witness(const Int& a, const Int& n, const Int& d, int r) {
    Int x = powm(a % n, d, n);
    if (x == 1 || x == n - 1) return false;
    for (int i = 1; i < r; ++i) {
        x = x * x % n;
        if (x == n - 1) return false;
    }
    return true;
}

// Divisors of |n| for nonzero n; `complete` is cleared when a cofactor
// cannot be certified prime or the divisor count blows past the cap.
std::vector<Int> divisors_of(Int n, bool& complete) {
    complete = true;
    n = abs(n);
    std::vector<std::pair<Int, int>> fac;
    auto record = [&](const Int& p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e > 0) fac.emplace_back(p, e);
    };
    record(2);
    for (Int p = 3; p * p <= n && p <= 1000000; p += 2) record(p);
    if (n > 1) {
        // no factor below 10^6 remains, so below 10^12 it is certainly prime
        bool prime;
        if (n < Int("1000000000000")) {
            prime = true;
        } else if (n < Int("3317044064679887385961981")) {
            prime = true;
            Int d = n - 1;
            int r = 0;
            while (d % 2 == 0) {
                d /= 2;
                ++r;
            }
            for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37})
                if (mr_composite_witness(Int(a), n, d, r)) {
                    prime = false;
                    break;
                }
        } else {
            prime = false;
        }
        if (prime) fac.emplace_back(n, 1);
        else complete = false;   // a large piece stays unfactored
    }
    std::vector<Int> divs{Int(1)};
    const std::size_t cap = 512;
    for (const auto& [p, e] : fac) {
        std::size_t base_count = divs.size();
        Int pe = 1;
        for (int k = 1; k <= e; ++k) {
            pe *= p;
            for (std::size_t i = 0; i < base_count; ++i) {
                divs.push_back(divs[i] * pe);
                if (divs.size() > cap) {
                    complete = false;
                    return divs;
                }
            }
        }
    }
    return divs;
}

} // namespace

RootSearch rational_roots(const UPoly& p) {
    RootSearch rs;
    if (p.is_zero()) {
        rs.candidates_complete = false;
        rs.all_roots_rational = false;
        return rs;
    }
    UPoly sf = p.squarefree_part();
    if (sf.degree() <= 0) return rs;

    Int den = 1;
    for (const Rat& c : sf.coeffs()) den = lcm(den, denominator(c));
    std::vector<Int> ic;
    ic.reserve(sf.coeffs().size());
    for (const Rat& c : sf.coeffs()) {
        Rat scaled = c * Rat(den);
        ic.push_back(numerator(scaled));
    }
    std::size_t v = 0;
    while (v < ic.size() && ic[v] == 0) ++v;
    std::set<Rat> found;
    if (v > 0) found.insert(Rat(0));
    std::vector<Rat> work(ic.begin() + static_cast<std::ptrdiff_t>(v), ic.end());
    UPoly rem{std::vector<Rat>(work)};

    if (rem.degree() >= 1) {
        bool c0 = true, cl = true;
        std::vector<Int> ps = divisors_of(numerator(rem.coeff(0)), c0);
        std::vector<Int> qs = divisors_of(numerator(rem.lead()), cl);
        rs.candidates_complete = c0 && cl;
        for (const Int& pp : ps) {
            for (const Int& qq : qs) {
                if (gcd(pp, qq) != 1) continue;
                for (int s : {1, -1}) {
                    Rat cand(s * pp, qq);
                    if (rem.evaluate(cand) == 0) found.insert(cand);
                }
            }
        }
    }
    for (const Rat& r : found) {
        if (r == 0) continue;
        rem = rem.divmod(UPoly({-r, Rat(1)})).first;
    }
    rs.all_roots_rational = rem.degree() <= 0;
    rs.roots.assign(found.begin(), found.end());
    return rs;
}

UPoly specialize_x(const SparsePoly& p, const Rat& x0) {
    long long dy = p.degree_y();
    if (dy < 0) return UPoly();
    std::vector<Rat> acc(static_cast<std::size_t>(dy) + 1, Rat(0));
    std::map<long long, Rat> xp{{0, Rat(1)}};
    for (const auto& [e, c] : p.terms()) {
        auto it = xp.find(e.first);
        if (it == xp.end()) {
            auto prev = xp.lower_bound(e.first);
            --prev;
            Rat v = prev->second;
            for (long long k = prev->first; k < e.first; ++k) v *= x0;
            it = xp.emplace(e.first, v).first;
        }
        acc[static_cast<std::size_t>(e.second)] += c * it->second;
    }
    return UPoly(std::move(acc));
}

UPoly specialize_y(const SparsePoly& p, const Rat& y0) {
    SparsePoly t;
    for (const auto& [e, c] : p.terms()) t.add_term(e.second, e.first, c);
    return specialize_x(t, y0);
}

namespace {

std::vector<UPoly> y_coefficients(const SparsePoly& p) {
    long long dy = p.degree_y();
    long long dx = p.degree_x();
    std::vector<std::vector<Rat>> rows(static_cast<std::size_t>(dy) + 1,
                                       std::vector<Rat>(static_cast<std::size_t>(dx) + 1, Rat(0)));
    for (const auto& [e, c] : p.terms())
        rows[static_cast<std::size_t>(e.second)][static_cast<std::size_t>(e.first)] = c;
    std::vector<UPoly> out;
    out.reserve(rows.size());
    for (auto& r : rows) out.emplace_back(std::move(r));
    return out;
}

UPoly x_only(const SparsePoly& p) {
    if (p.degree_y() > 0) throw std::logic_error("x_only: polynomial involves y");
    long long dx = p.degree_x();
    std::vector<Rat> c(static_cast<std::size_t>(std::max<long long>(dx, 0)) + 1, Rat(0));
    for (const auto& [e, v] : p.terms()) c[static_cast<std::size_t>(e.first)] = v;
    return UPoly(std::move(c));
}

Rat determinant(std::vector<std::vector<Rat>> m) {
    const std::size_t n = m.size();
    Rat det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) return Rat(0);
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) continue;
            Rat f = m[r][col] / m[col][col];
            for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

UPoly lagrange(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
    UPoly acc;
    for (std::size_t k = 0; k < xs.size(); ++k) {
        UPoly basis = UPoly::one();
        Rat denom = 1;
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (j == k) continue;
            basis = basis * UPoly({-xs[j], Rat(1)});
            denom *= xs[k] - xs[j];
        }
        acc = acc + basis * (ys[k] / denom);
    }
    return acc;
}

} // namespace

UPoly resultant_y(const SparsePoly& f, const SparsePoly& g) {
    if (f.is_zero() || g.is_zero()) return UPoly();
    long long df = f.degree_y();
    long long dg = g.degree_y();
    if (df == 0 && dg == 0) return UPoly::one();
    if (df == 0) return x_only(f).pow(dg);
    if (dg == 0) return x_only(g).pow(df);

    std::vector<UPoly> F = y_coefficients(f);
    std::vector<UPoly> G = y_coefficients(g);
    const std::size_t m = static_cast<std::size_t>(df + dg);
    long long bound = dg * std::max<long long>(f.degree_x(), 0) +
                      df * std::max<long long>(g.degree_x(), 0);

    std::vector<Rat> xs, ys;
    xs.reserve(static_cast<std::size_t>(bound) + 1);
    for (long long t = 0; t <= bound; ++t) {
        Rat x0(t);
        std::vector<std::vector<Rat>> mat(m, std::vector<Rat>(m, Rat(0)));
        for (long long r = 0; r < dg; ++r)
            for (long long k = 0; k <= df; ++k)
                mat[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + k)] =
                    F[static_cast<std::size_t>(df - k)].evaluate(x0);
        for (long long r = 0; r < df; ++r)
            for (long long k = 0; k <= dg; ++k)
                mat[static_cast<std::size_t>(dg + r)][static_cast<std::size_t>(r + k)] =
                    G[static_cast<std::size_t>(dg - k)].evaluate(x0);
        xs.push_back(x0);
        ys.push_back(determinant(std::move(mat)));
    }
    return lagrange(xs, ys);
}

UPoly resultant_x(const SparsePoly& f, const SparsePoly& g) {
    SparsePoly ft, gt;
    for (const auto& [e, c] : f.terms()) ft.add_term(e.second, e.first, c);
    for (const auto& [e, c] : g.terms()) gt.add_term(e.second, e.first, c);
    return resultant_y(ft, gt);
}

} // namespace qsing
