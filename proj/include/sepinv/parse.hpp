#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "errors.hpp"
#include "polynomial.hpp"

namespace sepinv {

/// Recursive-descent reader for polynomial strings such as
/// "x1^3 + x2*x3 - 3/4*x4^2" or "(a+1)*x1*y2". Variable names come from the
/// caller; `a` is the extension-field generator unless used as a variable
/// name. Negative exponents are rejected.
template <CoefficientField F>
class PolynomialParser {
public:
    PolynomialParser(F field, std::vector<std::string> names) : field_(std::move(field)), names_(std::move(names)) {
        for (std::size_t i = 0; i < names_.size(); ++i) index_.emplace(names_[i], i);
    }

    [[nodiscard]] Polynomial<F> parse(std::string_view text) const {
        State st{text, 0};
        skip_ws(st);
        if (st.pos == st.text.size()) throw InputError("empty polynomial string");
        auto p = expr(st);
        skip_ws(st);
        if (st.pos != st.text.size()) fail(st, "unexpected character");
        return p;
    }

    // Parses a constant (matrix entries, translations).
    [[nodiscard]] typename F::value_type parse_scalar(std::string_view text) const {
        auto p = parse(text);
        if (!p.is_constant()) throw InputError("expected a constant, got: " + std::string(text));
        return p.constant_term();
    }

    [[nodiscard]] std::size_t nvars() const { return names_.size(); }
    [[nodiscard]] const std::vector<std::string>& names() const { return names_; }

private:
    struct State {
        std::string_view text;
        std::size_t pos;
    };

    [[noreturn]] static void fail(const State& st, const std::string& what) {
        throw InputError(what + " at position " + std::to_string(st.pos) + " in \"" + std::string(st.text) + "\"");
    }

    static void skip_ws(State& st) {
        while (st.pos < st.text.size() && std::isspace(static_cast<unsigned char>(st.text[st.pos]))) ++st.pos;
    }

    static bool accept(State& st, char c) {
        skip_ws(st);
        if (st.pos < st.text.size() && st.text[st.pos] == c) {
            ++st.pos;
            return true;
        }
        return false;
    }

    Polynomial<F> expr(State& st) const {
        bool negate = false;
        if (accept(st, '-'))
            negate = true;
        else
            accept(st, '+');
        Polynomial<F> acc = term(st);
        if (negate) acc = -acc;
        while (true) {
            if (accept(st, '+'))
                acc += term(st);
            else if (accept(st, '-'))
                acc -= term(st);
            else
                break;
        }
        return acc;
    }

    Polynomial<F> term(State& st) const {
        Polynomial<F> acc = power(st);
        while (true) {
            if (accept(st, '*')) {
                acc *= power(st);
            } else if (accept(st, '/')) {
                auto d = power(st);
                if (!d.is_constant() || d.is_zero()) fail(st, "division only by nonzero constants");
                acc = acc.scaled(field_.inv(d.constant_term()));
            } else {
                break;
            }
        }
        return acc;
    }

    Polynomial<F> power(State& st) const {
        Polynomial<F> base = atom(st);
        if (accept(st, '^')) {
            skip_ws(st);
            if (st.pos < st.text.size() && st.text[st.pos] == '-') fail(st, "negative exponents are not allowed");
            std::size_t start = st.pos;
            while (st.pos < st.text.size() && std::isdigit(static_cast<unsigned char>(st.text[st.pos]))) ++st.pos;
            if (start == st.pos) fail(st, "expected exponent");
            const unsigned long e = std::stoul(std::string(st.text.substr(start, st.pos - start)));
            if (e > 65535) fail(st, "exponent too large");
            base = base.pow(static_cast<unsigned>(e));
        }
        return base;
    }

    Polynomial<F> atom(State& st) const {
        skip_ws(st);
        if (st.pos >= st.text.size()) fail(st, "unexpected end of input");
        const char c = st.text[st.pos];
        const std::size_t n = names_.size();
        if (c == '(') {
            ++st.pos;
            auto inner = expr(st);
            if (!accept(st, ')')) fail(st, "expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = st.pos;
            while (st.pos < st.text.size() && std::isdigit(static_cast<unsigned char>(st.text[st.pos]))) ++st.pos;
            auto v = field_.from_integer_string(std::string(st.text.substr(start, st.pos - start)));
            return Polynomial<F>::constant(field_, n, v);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = st.pos;
            while (st.pos < st.text.size() &&
                   (std::isalnum(static_cast<unsigned char>(st.text[st.pos])) || st.text[st.pos] == '_'))
                ++st.pos;
            std::string name(st.text.substr(start, st.pos - start));
            if (auto it = index_.find(name); it != index_.end()) return Polynomial<F>::variable(field_, n, it->second);
            if (name == "a") {
                if (!field_.has_generator()) fail(st, "'a' is only defined over extension fields");
                return Polynomial<F>::constant(field_, n, field_.generator());
            }
            st.pos = start;
            fail(st, "unknown variable '" + name + "'");
        }
        fail(st, "unexpected character");
    }

    F field_;
    std::vector<std::string> names_;
    std::unordered_map<std::string, std::size_t> index_;
};

template <CoefficientField F>
Polynomial<F> parse_polynomial(const F& field, std::size_t nvars, std::string_view text) {
    return PolynomialParser<F>(field, default_names(nvars)).parse(text);
}

}  // namespace sepinv
