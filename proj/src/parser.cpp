#include "extalg/parser.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <vector>

namespace extalg {

namespace {

class Cursor {
public:
    explicit Cursor(std::string_view text) : text_(text) {}

    std::size_t pos() const { return pos_; }
    bool at_end() {
        skip_space();
        return pos_ >= text_.size();
    }
    char peek_raw(std::size_t ahead = 0) const { return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0'; }
    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool starts_with(std::string_view token) {
        skip_space();
        return text_.substr(pos_).substr(0, token.size()) == token;
    }
    bool accept(std::string_view token) {
        if (!starts_with(token)) return false;
        pos_ += token.size();
        return true;
    }
    void expect(std::string_view token, const char* what) {
        if (!accept(token)) fail(std::string("expected ") + what);
    }
    std::string digits() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }
    std::string identifier() {
        skip_space();
        const std::size_t start = pos_;
        if (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
            ++pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
        }
        return std::string(text_.substr(start, pos_ - start));
    }
    [[noreturn]] void fail(const std::string& message, std::optional<std::size_t> at = std::nullopt) const {
        throw ParseError(message, at.value_or(pos_));
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

int small_int(Cursor& c, const std::string& text, std::size_t at) {
    if (text.empty()) c.fail("expected digits", at);
    if (text.size() > 6) c.fail("number too large", at);
    return std::stoi(text);
}

Rational read_rational(Cursor& c) {
    const std::size_t at = c.pos();
    const std::string num = c.digits();
    if (num.empty()) c.fail("expected a number", at);
    Rational q{mpz_class(num)};
    if (c.peek_raw() == '/' && std::isdigit(static_cast<unsigned char>(c.peek_raw(1)))) {
        c.accept("/");
        const std::size_t den_at = c.pos();
        const mpz_class den(c.digits());
        if (den == 0) c.fail("division by zero", den_at);
        q /= Rational(den);
    }
    return q;
}

class ExprParser {
public:
    ExprParser(std::string_view text, const Metric& metric) : c_(text), metric_(metric) {}

    MvField parse() {
        MvField v = expr();
        if (!c_.at_end()) c_.fail("unexpected token");
        return v;
    }

private:
    MvField add(MvField a, const MvField& b, bool subtract, std::size_t at) {
        if (b.is_zero()) return a;
        if (a.is_zero()) return subtract ? -b : b;
        if (a.grade() != b.grade())
            c_.fail("cannot add grade " + std::to_string(a.grade()) + " and grade " + std::to_string(b.grade()), at);
        return subtract ? a - b : a + b;
    }

    MvField expr() {
        const bool negate = c_.accept("-");
        MvField acc = term();
        if (negate) acc = -acc;
        while (true) {
            const std::size_t at = (c_.skip_space(), c_.pos());
            if (c_.accept("+"))
                acc = add(acc, term(), false, at);
            else if (c_.accept("-"))
                acc = add(acc, term(), true, at);
            else
                return acc;
        }
    }

    MvField term() {
        MvField acc = factor();
        while (true) {
            const std::size_t at = (c_.skip_space(), c_.pos());
            if (c_.accept("_|")) {
                acc = left_contract(acc, factor());
            } else if (c_.accept("|_")) {
                acc = right_contract(acc, factor());
            } else if (c_.accept("^")) {
                acc = wedge(acc, factor());
            } else if (c_.accept(".")) {
                MvField rhs = factor();
                if (acc.grade() != rhs.grade())
                    c_.fail("'.' needs equal grades, got " + std::to_string(acc.grade()) + " and " +
                                std::to_string(rhs.grade()),
                            at);
                acc = MvField::scalar(metric_, dot(acc, rhs));
            } else if (c_.accept("*")) {
                MvField rhs = factor();
                if (acc.grade() == 0 && !acc.is_zero())
                    acc = rhs.scaled(acc.coefficient(IndexList()));
                else if (rhs.grade() == 0)
                    acc = acc.scaled(rhs.coefficient(IndexList()));
                else if (acc.grade() == 0)
                    acc = MvField(metric_, rhs.grade());
                else
                    c_.fail("'*' needs a scalar operand", at);
            } else {
                return acc;
            }
        }
    }

    MvField factor() {
        c_.skip_space();
        const std::size_t at = c_.pos();
        if (c_.accept("hodge(")) return closed(hodge(expr()));
        if (c_.accept("invhodge(")) return closed(inv_hodge(expr()));
        if (c_.accept("d^")) return ext_deriv(factor());
        if (c_.accept("d_|")) return int_deriv(factor());
        if (c_.accept("(")) return closed(expr());
        if (c_.accept("e[")) return blade(at);
        const char ch = c_.peek_raw();
        if (ch == 'x') {
            c_.accept("x");
            return variable(at);
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) return MvField::scalar(metric_, Polynomial(read_rational(c_)));
        if (ch == '\0') c_.fail("unexpected end of input");
        c_.fail(std::string("unexpected character '") + ch + "'");
    }

    MvField closed(MvField v) {
        c_.expect(")", "')'");
        return v;
    }

    MvField blade(std::size_t at) {
        std::vector<int> idx;
        if (!c_.accept("]")) {
            do {
                c_.skip_space();
                const std::size_t num_at = c_.pos();
                const int i = small_int(c_, c_.digits(), num_at);
                if (i >= metric_.dim())
                    c_.fail("index " + std::to_string(i) + " outside dimension " + std::to_string(metric_.dim()),
                            num_at);
                if (!idx.empty() && i <= idx.back()) c_.fail("indices must be strictly increasing", num_at);
                idx.push_back(i);
            } while (c_.accept(","));
            c_.expect("]", "']'");
        }
        (void)at;
        return MvField::blade(metric_, IndexList(std::span<const int>(idx)));
    }

    MvField variable(std::size_t at) {
        const std::size_t num_at = c_.pos();
        const int i = small_int(c_, c_.digits(), num_at);
        if (i >= metric_.dim())
            c_.fail("coordinate x" + std::to_string(i) + " outside dimension " + std::to_string(metric_.dim()), at);
        std::uint32_t power = 1;
        if (c_.peek_raw() == '^' && std::isdigit(static_cast<unsigned char>(c_.peek_raw(1)))) {
            c_.accept("^");
            const std::size_t pow_at = c_.pos();
            power = static_cast<std::uint32_t>(small_int(c_, c_.digits(), pow_at));
        }
        return MvField::scalar(metric_, Polynomial::monomial(Monomial::variable(i, power), Rational(1)));
    }

    Cursor c_;
    Metric metric_;
};

struct RawSlot {
    DerivOp op;
    std::string name;
    std::size_t at;
};

RawSlot read_slot(Cursor& c) {
    c.skip_space();
    DerivOp op = DerivOp::Id;
    if (c.accept("d^"))
        op = DerivOp::Ext;
    else if (c.accept("d_|"))
        op = DerivOp::Int;
    else if (c.starts_with("dX"))
        c.accept("dX"), op = DerivOp::Tensor;
    c.skip_space();
    const std::size_t at = c.pos();
    std::string name = c.identifier();
    if (name.empty()) c.fail("expected a field name");
    return RawSlot{op, std::move(name), at};
}

int shift(DerivOp op) {
    switch (op) {
        case DerivOp::Ext: return 1;
        case DerivOp::Int: return -1;
        default: return 0;
    }
}

}  // namespace

MvField parse_expr(std::string_view text, const Metric& metric) {
    try {
        return ExprParser(text, metric).parse();
    } catch (const ParseError&) {
        throw;
    } catch (const std::domain_error& e) {
        throw ParseError(e.what(), 0);
    }
}

LagrangianDensity parse_lagrangian(std::string_view text, const Metric& metric, const FieldSymbol& dynamical) {
    Cursor c(text);
    struct RawTerm {
        Rational coeff;
        RawSlot left, right;
    };
    std::vector<RawTerm> raw;
    bool first = true;
    while (first || !c.at_end()) {
        Rational sign(1);
        if (c.accept("-"))
            sign = -1;
        else if (!first && !c.accept("+"))
            c.fail("expected '+' or '-'");
        first = false;
        Rational coeff(1);
        c.skip_space();
        if (std::isdigit(static_cast<unsigned char>(c.peek_raw()))) {
            coeff = read_rational(c);
            c.accept("*");
        }
        c.expect("(", "'('");
        RawSlot left = read_slot(c);
        c.expect(".", "'.'");
        RawSlot right = read_slot(c);
        c.expect(")", "')'");
        raw.push_back(RawTerm{Rational(sign * coeff), std::move(left), std::move(right)});
    }

    // Source grades follow from the factor each source is dotted with.
    std::map<std::string, int> grades{{dynamical.name, dynamical.grade}};
    for (bool changed = true; changed;) {
        changed = false;
        for (const auto& t : raw) {
            for (auto [known, other] : {std::pair{&t.left, &t.right}, std::pair{&t.right, &t.left}}) {
                auto it = grades.find(known->name);
                if (it == grades.end() || grades.count(other->name)) continue;
                grades[other->name] = it->second + shift(known->op) - shift(other->op);
                changed = true;
            }
        }
    }

    std::vector<LagrangianTerm> terms;
    for (const auto& t : raw) {
        auto symbol = [&](const RawSlot& s) {
            auto it = grades.find(s.name);
            if (it == grades.end()) c.fail("cannot infer the grade of '" + s.name + "'", s.at);
            if (it->second < 0 || it->second > metric.dim())
                c.fail("'" + s.name + "' would have grade " + std::to_string(it->second), s.at);
            return FieldSymbol{s.name, it->second, s.name == dynamical.name ? FieldRole::Dynamical : FieldRole::Source};
        };
        terms.push_back(LagrangianTerm{t.coeff, Slot{t.left.op, symbol(t.left)}, Slot{t.right.op, symbol(t.right)}});
    }
    try {
        return LagrangianDensity(metric, std::move(terms));
    } catch (const std::domain_error& e) {
        throw ParseError(e.what(), 0);
    }
}

}  // namespace extalg
