#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <limits>

#include "errors.hpp"

namespace sepinv {

// Upper bound on ring size. The largest rings used are doubled rings of
// 4-dimensional scenes plus one Rabinowitsch variable, and doubled torus rings.
inline constexpr std::size_t kMaxVariables = 24;

/// Exponent vector with cached total degree. Unused trailing slots are zero,
/// so comparisons do not need to know the ring size.
class Monomial {
public:
    using Exponent = std::uint16_t;

    Monomial() = default;

    static Monomial variable(std::size_t index, unsigned power = 1) {
        Monomial m;
        m.set(index, power);
        return m;
    }

    [[nodiscard]] Exponent operator[](std::size_t i) const { return e_[i]; }
    [[nodiscard]] std::uint32_t degree() const { return degree_; }
    [[nodiscard]] bool is_one() const { return degree_ == 0; }

    void set(std::size_t i, unsigned value) {
        if (i >= kMaxVariables) throw InputError("variable index exceeds supported ring size");
        if (value > std::numeric_limits<Exponent>::max()) throw InputError("exponent overflow");
        degree_ = degree_ - e_[i] + value;
        e_[i] = static_cast<Exponent>(value);
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial out;
        for (std::size_t i = 0; i < kMaxVariables; ++i) {
            const unsigned s = unsigned(a.e_[i]) + b.e_[i];
            if (s > std::numeric_limits<Exponent>::max()) throw InputError("exponent overflow");
            out.e_[i] = static_cast<Exponent>(s);
        }
        out.degree_ = a.degree_ + b.degree_;
        return out;
    }

    // Requires b | a.
    friend Monomial operator/(const Monomial& a, const Monomial& b) {
        Monomial out;
        for (std::size_t i = 0; i < kMaxVariables; ++i) out.e_[i] = static_cast<Exponent>(a.e_[i] - b.e_[i]);
        out.degree_ = a.degree_ - b.degree_;
        return out;
    }

    [[nodiscard]] Monomial pow(unsigned k) const {
        Monomial out;
        for (std::size_t i = 0; i < kMaxVariables; ++i) out.set(i, unsigned(e_[i]) * k);
        return out;
    }

    [[nodiscard]] bool divides(const Monomial& b) const {
        if (degree_ > b.degree_) return false;
        for (std::size_t i = 0; i < kMaxVariables; ++i)
            if (e_[i] > b.e_[i]) return false;
        return true;
    }

    [[nodiscard]] bool coprime(const Monomial& b) const {
        for (std::size_t i = 0; i < kMaxVariables; ++i)
            if (e_[i] != 0 && b.e_[i] != 0) return false;
        return true;
    }

    [[nodiscard]] static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial out;
        std::uint32_t d = 0;
        for (std::size_t i = 0; i < kMaxVariables; ++i) {
            out.e_[i] = a.e_[i] > b.e_[i] ? a.e_[i] : b.e_[i];
            d += out.e_[i];
        }
        out.degree_ = d;
        return out;
    }

    // Bit i set iff variable i occurs.
    [[nodiscard]] std::uint32_t support() const {
        std::uint32_t mask = 0;
        for (std::size_t i = 0; i < kMaxVariables; ++i)
            if (e_[i]) mask |= (1u << i);
        return mask;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }

    [[nodiscard]] std::size_t hash() const {
        std::size_t h = 1469598103934665603ull;
        for (auto v : e_) {
            h ^= v;
            h *= 1099511628211ull;
        }
        return h;
    }

private:
    std::array<Exponent, kMaxVariables> e_{};
    std::uint32_t degree_ = 0;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Term orders. `elimination(b)` compares the first b variables by grevlex
/// first and breaks ties by grevlex on the rest.
class MonomialOrder {
public:
    enum class Kind { grevlex, lex, elimination };

    static MonomialOrder grevlex() { return MonomialOrder(Kind::grevlex, 0); }
    static MonomialOrder lex() { return MonomialOrder(Kind::lex, 0); }
    static MonomialOrder elimination(unsigned block) { return MonomialOrder(Kind::elimination, block); }

    [[nodiscard]] Kind kind() const { return kind_; }
    [[nodiscard]] unsigned block() const { return block_; }

    // Positive when a > b.
    [[nodiscard]] int compare(const Monomial& a, const Monomial& b) const {
        switch (kind_) {
            case Kind::grevlex: return grevlex_range(a, b, 0, kMaxVariables, a.degree(), b.degree());
            case Kind::lex:
                for (std::size_t i = 0; i < kMaxVariables; ++i)
                    if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
                return 0;
            case Kind::elimination: {
                std::uint32_t da = 0, db = 0;
                for (std::size_t i = 0; i < block_; ++i) {
                    da += a[i];
                    db += b[i];
                }
                if (int c = grevlex_range(a, b, 0, block_, da, db); c != 0) return c;
                return grevlex_range(a, b, block_, kMaxVariables, a.degree() - da, b.degree() - db);
            }
        }
        return 0;
    }

    [[nodiscard]] bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    [[nodiscard]] std::string name() const {
        switch (kind_) {
            case Kind::grevlex: return "grevlex";
            case Kind::lex: return "lex";
            case Kind::elimination: return "elimination(" + std::to_string(block_) + ")";
        }
        return "?";
    }

    friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

private:
    MonomialOrder(Kind k, unsigned block) : kind_(k), block_(block) {}

    static int grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi, std::uint32_t da,
                             std::uint32_t db) {
        if (da != db) return da > db ? 1 : -1;
        for (std::size_t i = hi; i-- > lo;)
            if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
        return 0;
    }

    Kind kind_;
    unsigned block_;
};

}  // namespace sepinv
