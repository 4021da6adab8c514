#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace sepinv {

inline constexpr std::uint64_t kMaxFiniteFieldSize = 1u << 20;

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace detail {

// Dense univariate polynomials over F_p, coefficients low to high.
using UPoly = std::vector<std::uint32_t>;

inline void trim(UPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    std::int64_t t = 0, nt = 1, r = p, nr = a % p;
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::tie(t, nt) = std::make_pair(nt, t - q * nt);
        std::tie(r, nr) = std::make_pair(nr, r - q * nr);
    }
    if (t < 0) t += p;
    return static_cast<std::uint32_t>(t);
}

// Remainder of a modulo b (b nonzero) over F_p.
inline UPoly upoly_mod(UPoly a, const UPoly& b, std::uint32_t p) {
    trim(a);
    const std::size_t db = b.size() - 1;
    const std::uint32_t lead_inv = inv_mod(b.back(), p);
    while (a.size() >= b.size()) {
        const std::uint64_t c = std::uint64_t(a.back()) * lead_inv % p;
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i) {
            const std::uint64_t sub = c * b[i] % p;
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
        }
        trim(a);
    }
    return a;
}

inline bool upoly_irreducible(const UPoly& f, std::uint32_t p) {
    const std::size_t deg = f.size() - 1;
    if (deg <= 1) return deg == 1;
    // trial division by every monic polynomial of degree 1..deg/2
    for (std::size_t d = 1; d <= deg / 2; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t code = 0; code < count; ++code) {
            UPoly g(d + 1);
            std::uint64_t c = code;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = static_cast<std::uint32_t>(c % p);
                c /= p;
            }
            g[d] = 1;
            if (upoly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

// Lexicographically least monic irreducible polynomial of degree m over F_p.
inline UPoly least_irreducible(std::uint32_t p, unsigned m) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < m; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
        UPoly f(m + 1);
        std::uint64_t c = code;
        for (unsigned i = 0; i < m; ++i) {
            f[i] = static_cast<std::uint32_t>(c % p);
            c /= p;
        }
        f[m] = 1;
        if (upoly_irreducible(f, p)) return f;
    }
    throw InputError("no irreducible polynomial found");
}

inline std::string_view strip(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

// Parses "x^4+x+1" style univariate polynomials with integer coefficients
// reduced modulo p.
inline UPoly parse_univariate(std::string_view text, std::uint32_t p) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw InputError("empty minimal polynomial");
    UPoly out;
    std::size_t pos = 0;
    while (pos < s.size()) {
        int sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            if (s[pos] == '-') sign = -1;
            ++pos;
        }
        std::uint64_t coef = 1;
        bool have_coef = false;
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos > start) {
            coef = 0;
            for (std::size_t i = start; i < pos; ++i) coef = (coef * 10 + (s[i] - '0')) % p;
            have_coef = true;
            if (pos < s.size() && s[pos] == '*') ++pos;
        }
        std::size_t exponent = 0;
        if (pos < s.size() && s[pos] == 'x') {
            ++pos;
            exponent = 1;
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                std::size_t estart = pos;
                while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
                if (pos == estart) throw InputError("bad exponent in minimal polynomial");
                exponent = std::stoul(s.substr(estart, pos - estart));
            }
        } else if (!have_coef) {
            throw InputError("bad term in minimal polynomial: " + std::string(text));
        }
        if (pos < s.size() && s[pos] != '+' && s[pos] != '-')
            throw InputError("bad minimal polynomial: " + std::string(text));
        if (out.size() <= exponent) out.resize(exponent + 1, 0);
        std::uint64_t v = coef % p;
        if (sign < 0) v = (p - v) % p;
        out[exponent] = static_cast<std::uint32_t>((out[exponent] + v) % p);
    }
    trim(out);
    return out;
}

}  // namespace detail

/// Names one of the supported coefficient fields. Textual forms:
/// "Q", "F7", "F16:x^4+x+1", and "F4" (least irreducible modulus chosen).
struct FieldSpec {
    enum class Kind { rationals, prime, extension };

    Kind kind = Kind::rationals;
    std::uint32_t p = 0;
    unsigned m = 1;
    std::vector<std::uint32_t> minimal_polynomial;  // low to high, monic, degree m

    static FieldSpec rationals() { return {}; }

    static FieldSpec prime(std::uint32_t p) {
        if (!is_prime(p) || p >= (1u << 31)) throw InputError("not a prime below 2^31: " + std::to_string(p));
        FieldSpec s;
        s.kind = Kind::prime;
        s.p = p;
        return s;
    }

    static FieldSpec extension(std::uint32_t p, std::vector<std::uint32_t> minpoly) {
        if (!is_prime(p)) throw InputError("not a prime: " + std::to_string(p));
        detail::trim(minpoly);
        if (minpoly.size() < 3) throw InputError("extension degree must be at least 2");
        const unsigned m = static_cast<unsigned>(minpoly.size() - 1);
        if (m > 4) throw InputError("extension degree above 4 is not supported");
        if (minpoly.back() != 1) throw InputError("minimal polynomial must be monic");
        std::uint64_t q = 1;
        for (unsigned i = 0; i < m; ++i) q *= p;
        if (q > kMaxFiniteFieldSize) throw InputError("field size exceeds 2^20");
        if (!detail::upoly_irreducible(minpoly, p)) throw InputError("minimal polynomial is reducible");
        FieldSpec s;
        s.kind = Kind::extension;
        s.p = p;
        s.m = m;
        s.minimal_polynomial = std::move(minpoly);
        return s;
    }

    static FieldSpec finite(std::uint32_t p, unsigned m) {
        if (m == 1) return prime(p);
        return extension(p, detail::least_irreducible(p, m));
    }

    static FieldSpec parse(std::string_view text) {
        text = detail::strip(text);
        if (text == "Q" || text == "QQ") return rationals();
        if (text.empty() || text.front() != 'F') throw InputError("unknown field: " + std::string(text));
        std::string_view rest = text.substr(1);
        std::string_view modulus;
        if (auto colon = rest.find(':'); colon != std::string_view::npos) {
            modulus = rest.substr(colon + 1);
            rest = rest.substr(0, colon);
        }
        std::uint64_t q = 0;
        auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), q);
        if (ec != std::errc() || ptr != rest.data() + rest.size() || q < 2)
            throw InputError("bad field size in: " + std::string(text));
        std::uint64_t p = 0;
        for (std::uint64_t d = 2; d * d <= q; ++d)
            if (q % d == 0) {
                p = d;
                break;
            }
        if (p == 0) p = q;
        unsigned m = 0;
        std::uint64_t rem = q;
        while (rem % p == 0) {
            rem /= p;
            ++m;
        }
        if (rem != 1) throw InputError("field size is not a prime power: " + std::string(text));
        if (m == 1) {
            if (!modulus.empty()) throw InputError("prime field takes no modulus: " + std::string(text));
            return prime(static_cast<std::uint32_t>(p));
        }
        if (modulus.empty()) return finite(static_cast<std::uint32_t>(p), m);
        auto poly = detail::parse_univariate(modulus, static_cast<std::uint32_t>(p));
        if (poly.size() != m + 1) throw InputError("minimal polynomial degree does not match field size");
        return extension(static_cast<std::uint32_t>(p), std::move(poly));
    }

    [[nodiscard]] std::uint64_t size() const {
        std::uint64_t q = 1;
        for (unsigned i = 0; i < m; ++i) q *= p;
        return q;
    }

    [[nodiscard]] std::string to_string() const {
        switch (kind) {
            case Kind::rationals: return "Q";
            case Kind::prime: return "F" + std::to_string(p);
            case Kind::extension: {
                std::string out = "F" + std::to_string(size()) + ":";
                bool first = true;
                for (std::size_t e = minimal_polynomial.size(); e-- > 0;) {
                    const auto c = minimal_polynomial[e];
                    if (c == 0) continue;
                    if (!first) out += "+";
                    first = false;
                    if (e == 0 || c != 1) out += std::to_string(c);
                    if (e > 0 && c != 1) out += "*";
                    if (e >= 1) out += "x";
                    if (e >= 2) out += "^" + std::to_string(e);
                }
                return out;
            }
        }
        return "?";
    }

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// The rational numbers. Values are GMP fractions, always canonical.
class RationalField {
public:
    using value_type = mpq_class;

    RationalField() = default;
    explicit RationalField(const FieldSpec& spec) {
        if (spec.kind != FieldSpec::Kind::rationals) throw InputError("not a rational field spec");
    }

    [[nodiscard]] FieldSpec spec() const { return FieldSpec::rationals(); }
    [[nodiscard]] std::uint32_t characteristic() const { return 0; }

    [[nodiscard]] value_type zero() const { return 0; }
    [[nodiscard]] value_type one() const { return 1; }
    [[nodiscard]] value_type from_int(long long v) const { return value_type(static_cast<long>(v)); }
    [[nodiscard]] value_type from_integer_string(const std::string& digits) const { return value_type(mpz_class(digits)); }

    [[nodiscard]] bool is_zero(const value_type& a) const { return sgn(a) == 0; }
    [[nodiscard]] bool is_one(const value_type& a) const { return a == 1; }
    [[nodiscard]] bool equal(const value_type& a, const value_type& b) const { return a == b; }

    [[nodiscard]] value_type add(const value_type& a, const value_type& b) const { return a + b; }
    [[nodiscard]] value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    [[nodiscard]] value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    [[nodiscard]] value_type neg(const value_type& a) const { return -a; }
    [[nodiscard]] value_type inv(const value_type& a) const {
        if (is_zero(a)) throw std::domain_error("division by zero");
        return 1 / a;
    }
    [[nodiscard]] value_type div(const value_type& a, const value_type& b) const { return mul(a, inv(b)); }

    void add_to(value_type& acc, const value_type& b) const { acc += b; }

    // Extension generator does not exist over Q.
    [[nodiscard]] bool has_generator() const { return false; }
    [[nodiscard]] value_type generator() const { throw InputError("'a' is only defined over extension fields"); }

    [[nodiscard]] std::string to_string(const value_type& a) const { return a.get_str(); }

    [[nodiscard]] std::size_t hash(const value_type& a) const {
        return std::hash<std::string>{}(a.get_str());
    }
};

namespace detail {

struct FiniteFieldTables {
    std::vector<std::uint32_t> exp;  // exp[i] = g^i, length q-1
    std::vector<std::uint32_t> log;  // log[exp[i]] = i
};

// Field tables are interned per modulus and live for the whole process so
// that FiniteField stays a trivially copyable handle.
inline const FiniteFieldTables* intern_tables(std::uint32_t p, const std::vector<std::uint32_t>& minpoly) {
    static std::mutex mu;
    static std::map<std::pair<std::uint32_t, std::vector<std::uint32_t>>, std::unique_ptr<FiniteFieldTables>> cache;
    std::lock_guard lock(mu);
    auto key = std::make_pair(p, minpoly);
    if (auto it = cache.find(key); it != cache.end()) return it->second.get();

    const unsigned m = static_cast<unsigned>(minpoly.size() - 1);
    std::uint32_t q = 1;
    for (unsigned i = 0; i < m; ++i) q *= p;

    auto encode = [&](const UPoly& a) {
        std::uint32_t v = 0;
        for (std::size_t i = a.size(); i-- > 0;) v = v * p + a[i];
        return v;
    };
    auto decode = [&](std::uint32_t v) {
        UPoly a(m, 0);
        for (unsigned i = 0; i < m; ++i) {
            a[i] = v % p;
            v /= p;
        }
        return a;
    };
    auto mulmod = [&](const UPoly& a, const UPoly& b) {
        UPoly c(a.size() + b.size(), 0);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j)
                c[i + j] = static_cast<std::uint32_t>((c[i + j] + std::uint64_t(a[i]) * b[j]) % p);
        return upoly_mod(std::move(c), minpoly, p);
    };

    auto tables = std::make_unique<FiniteFieldTables>();
    for (std::uint32_t cand = 2; cand < q; ++cand) {
        const UPoly g = decode(cand);
        std::vector<std::uint32_t> exp;
        exp.reserve(q - 1);
        UPoly cur{1};
        bool ok = true;
        for (std::uint32_t i = 0; i < q - 1; ++i) {
            const std::uint32_t v = encode(cur);
            if (i > 0 && v == 1) {
                ok = false;
                break;
            }
            exp.push_back(v);
            cur = mulmod(cur, g);
        }
        if (!ok) continue;
        tables->exp = std::move(exp);
        tables->log.assign(q, 0);
        for (std::uint32_t i = 0; i < q - 1; ++i) tables->log[tables->exp[i]] = i;
        break;
    }
    if (tables->exp.empty()) throw InputError("no primitive element found");
    auto* raw = tables.get();
    cache.emplace(std::move(key), std::move(tables));
    return raw;
}

}  // namespace detail

/// F_q with q = p^m. Elements are encoded as integers in [0, q) whose base-p
/// digits are the coefficients of the generator powers a^0..a^(m-1); prime
/// field elements are therefore the integers 0..p-1 in every extension.
class FiniteField {
public:
    using value_type = std::uint32_t;

    FiniteField() : FiniteField(FieldSpec::prime(2)) {}

    explicit FiniteField(const FieldSpec& spec) : spec_(std::make_shared<FieldSpec>(spec)) {
        if (spec.kind == FieldSpec::Kind::rationals) throw InputError("not a finite field spec");
        p_ = spec.p;
        m_ = spec.m;
        q_ = static_cast<std::uint32_t>(spec.size());
        if (m_ > 1) tables_ = detail::intern_tables(p_, spec.minimal_polynomial);
    }

    [[nodiscard]] const FieldSpec& spec() const { return *spec_; }
    [[nodiscard]] std::uint32_t characteristic() const { return p_; }
    [[nodiscard]] std::uint32_t degree() const { return m_; }
    [[nodiscard]] std::uint32_t size() const { return q_; }

    [[nodiscard]] value_type zero() const { return 0; }
    [[nodiscard]] value_type one() const { return 1; }
    [[nodiscard]] value_type from_int(long long v) const {
        long long r = v % static_cast<long long>(p_);
        if (r < 0) r += p_;
        return static_cast<value_type>(r);
    }
    [[nodiscard]] value_type from_integer_string(const std::string& digits) const {
        std::uint64_t r = 0;
        for (char c : digits) r = (r * 10 + static_cast<std::uint64_t>(c - '0')) % p_;
        return static_cast<value_type>(r);
    }
    // Element with encoding `code`; codes outside [0, q) are rejected.
    [[nodiscard]] value_type from_code(std::uint64_t code) const {
        if (code >= q_) throw InputError("field element code out of range");
        return static_cast<value_type>(code);
    }

    [[nodiscard]] bool is_zero(value_type a) const { return a == 0; }
    [[nodiscard]] bool is_one(value_type a) const { return a == 1; }
    [[nodiscard]] bool equal(value_type a, value_type b) const { return a == b; }

    [[nodiscard]] value_type add(value_type a, value_type b) const {
        if (m_ == 1) {
            std::uint64_t s = std::uint64_t(a) + b;
            return static_cast<value_type>(s >= p_ ? s - p_ : s);
        }
        if (p_ == 2) return a ^ b;
        value_type out = 0, scale = 1;
        for (unsigned i = 0; i < m_; ++i) {
            value_type d = (a % p_ + b % p_) % p_;
            out += d * scale;
            scale *= p_;
            a /= p_;
            b /= p_;
        }
        return out;
    }
    [[nodiscard]] value_type neg(value_type a) const {
        if (m_ == 1) return a == 0 ? 0 : p_ - a;
        if (p_ == 2) return a;
        value_type out = 0, scale = 1;
        for (unsigned i = 0; i < m_; ++i) {
            value_type d = a % p_;
            out += (d == 0 ? 0 : p_ - d) * scale;
            scale *= p_;
            a /= p_;
        }
        return out;
    }
    [[nodiscard]] value_type sub(value_type a, value_type b) const { return add(a, neg(b)); }
    [[nodiscard]] value_type mul(value_type a, value_type b) const {
        if (a == 0 || b == 0) return 0;
        if (m_ == 1) return static_cast<value_type>(std::uint64_t(a) * b % p_);
        std::uint32_t e = tables_->log[a] + tables_->log[b];
        if (e >= q_ - 1) e -= q_ - 1;
        return tables_->exp[e];
    }
    [[nodiscard]] value_type inv(value_type a) const {
        if (a == 0) throw std::domain_error("division by zero");
        if (m_ == 1) return detail::inv_mod(a, p_);
        std::uint32_t l = tables_->log[a];
        return tables_->exp[l == 0 ? 0 : (q_ - 1) - l];
    }
    [[nodiscard]] value_type div(value_type a, value_type b) const { return mul(a, inv(b)); }
    [[nodiscard]] value_type pow(value_type a, std::uint64_t e) const {
        value_type r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    void add_to(value_type& acc, value_type b) const { acc = add(acc, b); }

    [[nodiscard]] bool has_generator() const { return m_ > 1; }
    [[nodiscard]] value_type generator() const {
        if (m_ == 1) throw InputError("'a' is only defined over extension fields");
        return p_;
    }

    [[nodiscard]] std::string to_string(value_type a) const {
        if (m_ == 1) return std::to_string(a);
        std::string out;
        for (unsigned i = m_; i-- > 0;) {
            value_type scale = 1;
            for (unsigned k = 0; k < i; ++k) scale *= p_;
            const value_type d = (a / scale) % p_;
            if (d == 0) continue;
            if (!out.empty()) out += "+";
            if (i == 0 || d != 1) out += std::to_string(d);
            if (i > 0 && d != 1) out += "*";
            if (i >= 1) out += "a";
            if (i >= 2) out += "^" + std::to_string(i);
        }
        return out.empty() ? "0" : out;
    }

    [[nodiscard]] std::size_t hash(value_type a) const { return a; }

    // Every element in encoding order 0..q-1.
    [[nodiscard]] std::vector<value_type> elements() const {
        std::vector<value_type> out(q_);
        for (std::uint32_t i = 0; i < q_; ++i) out[i] = i;
        return out;
    }

private:
    std::shared_ptr<const FieldSpec> spec_;
    std::uint32_t p_ = 2;
    std::uint32_t m_ = 1;
    std::uint32_t q_ = 2;
    const detail::FiniteFieldTables* tables_ = nullptr;
};

template <class F>
concept CoefficientField = requires(const F f, const typename F::value_type a) {
    { f.add(a, a) } -> std::convertible_to<typename F::value_type>;
    { f.mul(a, a) } -> std::convertible_to<typename F::value_type>;
    { f.inv(a) } -> std::convertible_to<typename F::value_type>;
    { f.is_zero(a) } -> std::convertible_to<bool>;
    { f.characteristic() } -> std::convertible_to<std::uint32_t>;
};

static_assert(CoefficientField<RationalField>);
static_assert(CoefficientField<FiniteField>);

}  // namespace sepinv
