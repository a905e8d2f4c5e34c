#include <selim/polynomial.hpp>

#include <selim/error.hpp>

#include <algorithm>
#include <limits>
#include <sstream>
#include <utility>

namespace selim {

ExponentVector exp_add(const ExponentVector& a, const ExponentVector& b) {
    if (a.size() != b.size())
        throw dimension_error("exponent vectors of different lengths");
    ExponentVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (__builtin_add_overflow(a[i], b[i], &out[i]))
            throw domain_error("exponent overflow");
    return out;
}

std::int64_t exp_total_degree(const ExponentVector& e) {
    std::int64_t total = 0;
    for (std::int64_t x : e)
        if (__builtin_add_overflow(total, x, &total))
            throw domain_error("exponent overflow");
    return total;
}

bool graded_lex_less(const ExponentVector& a, const ExponentVector& b) {
    const std::int64_t da = exp_total_degree(a), db = exp_total_degree(b);
    if (da != db)
        return da < db;
    return a < b;
}

Polynomial::Polynomial(std::vector<std::string> vars) : vars_(std::move(vars)) {}

Polynomial Polynomial::constant(std::vector<std::string> vars, Rational value) {
    Polynomial p(std::move(vars));
    p.add_term(ExponentVector(p.nvars(), 0), value);
    return p;
}

Polynomial Polynomial::monomial(std::vector<std::string> vars, ExponentVector exps, Rational coeff) {
    Polynomial p(std::move(vars));
    p.add_term(std::move(exps), coeff);
    return p;
}

Polynomial Polynomial::variable(std::vector<std::string> vars, std::size_t index) {
    if (index >= vars.size())
        throw dimension_error("variable index out of range");
    ExponentVector e(vars.size(), 0);
    e[index] = 1;
    return monomial(std::move(vars), std::move(e), Rational(1));
}

Rational Polynomial::coeff(const ExponentVector& exps) const {
    const auto it = terms_.find(exps);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const ExponentVector& exps, const Rational& coeff) {
    if (exps.size() != nvars())
        throw dimension_error("exponent vector length does not match variable count");
    if (coeff == 0)
        return;
    auto [it, inserted] = terms_.emplace(exps, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0)
            terms_.erase(it);
    }
}

namespace {

void require_same_vars(const Polynomial& a, const Polynomial& b) {
    if (a.vars() != b.vars())
        throw dimension_error("polynomials over different variable lists");
}

} // namespace

Polynomial Polynomial::operator+(const Polynomial& other) const {
    require_same_vars(*this, other);
    Polynomial out = *this;
    for (const auto& [e, c] : other.terms_)
        out.add_term(e, c);
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
    require_same_vars(*this, other);
    Polynomial out = *this;
    for (const auto& [e, c] : other.terms_)
        out.add_term(e, -c);
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    require_same_vars(*this, other);
    Polynomial out(vars_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : other.terms_)
            out.add_term(exp_add(ea, eb), ca * cb);
    return out;
}

Polynomial Polynomial::operator-() const {
    Polynomial out(vars_);
    for (const auto& [e, c] : terms_)
        out.terms_.emplace(e, -c);
    return out;
}

Polynomial Polynomial::operator*(const Rational& scalar) const {
    Polynomial out(vars_);
    if (scalar == 0)
        return out;
    for (const auto& [e, c] : terms_)
        out.terms_.emplace(e, c * scalar);
    return out;
}

Rational Polynomial::eval(const std::vector<Rational>& point) const {
    if (point.size() != nvars())
        throw dimension_error("evaluation point length does not match variable count");
    Rational total(0);
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            term *= rational_pow(point[i], e[i]);
        }
        total += term;
    }
    return total;
}

std::int64_t Polynomial::total_degree() const {
    std::int64_t best = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const std::int64_t d = exp_total_degree(e);
        if (first || d > best)
            best = d;
        first = false;
    }
    return best;
}

std::int64_t Polynomial::degree_in(std::size_t var) const {
    std::int64_t best = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first || e[var] > best)
            best = e[var];
        first = false;
    }
    return best;
}

std::int64_t Polynomial::min_degree_in(std::size_t var) const {
    std::int64_t best = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first || e[var] < best)
            best = e[var];
        first = false;
    }
    return best;
}

bool Polynomial::has_negative_exponents() const {
    for (const auto& [e, c] : terms_)
        for (std::int64_t x : e)
            if (x < 0)
                return true;
    return false;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty())
        return true;
    const std::int64_t d = exp_total_degree(terms_.begin()->first);
    for (const auto& [e, c] : terms_)
        if (exp_total_degree(e) != d)
            return false;
    return true;
}

Polynomial Polynomial::derivative(std::size_t var) const {
    if (var >= nvars())
        throw dimension_error("variable index out of range");
    Polynomial out(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0)
            continue;
        ExponentVector d = e;
        d[var] -= 1;
        out.add_term(d, c * Rational(static_cast<long>(e[var])));
    }
    return out;
}

const ExponentVector& Polynomial::leading_exponents() const {
    if (terms_.empty())
        throw domain_error("zero polynomial has no leading term");
    const ExponentVector* best = &terms_.begin()->first;
    for (const auto& [e, c] : terms_)
        if (graded_lex_less(*best, e))
            best = &e;
    return *best;
}

std::string Polynomial::str() const {
    if (terms_.empty())
        return "0";

    std::vector<const ExponentVector*> order;
    order.reserve(terms_.size());
    for (const auto& [e, c] : terms_)
        order.push_back(&e);
    std::sort(order.begin(), order.end(),
              [](const ExponentVector* a, const ExponentVector* b) { return graded_lex_less(*b, *a); });

    std::ostringstream out;
    bool first = true;
    for (const ExponentVector* e : order) {
        Rational c = terms_.at(*e);
        const bool negative = c < 0;
        if (first) {
            if (negative)
                out << "-";
        } else {
            out << (negative ? " - " : " + ");
        }
        first = false;
        if (negative)
            c = -c;

        std::string monomial;
        for (std::size_t i = 0; i < e->size(); ++i) {
            const std::int64_t k = (*e)[i];
            if (k == 0)
                continue;
            if (!monomial.empty())
                monomial += "*";
            monomial += vars_[i];
            if (k != 1)
                monomial += "^" + std::to_string(k);
        }
        if (monomial.empty()) {
            out << to_string(c);
        } else {
            if (c != 1)
                out << to_string(c) << "*";
            out << monomial;
        }
    }
    return out.str();
}

Polynomial compose(const Polynomial& p, const std::vector<Polynomial>& args) {
    if (args.size() != p.nvars())
        throw dimension_error("composition needs one argument per variable");
    if (p.has_negative_exponents())
        throw domain_error("composition requires nonnegative exponents");
    for (const Polynomial& a : args)
        if (a.vars() != args.front().vars())
            throw dimension_error("composition arguments over different variable lists");

    const std::vector<std::string>& target_vars = args.front().vars();
    Polynomial out(target_vars);
    for (const auto& [e, c] : p.terms()) {
        Polynomial term = Polynomial::constant(target_vars, c);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0)
                term = term * pow(args[i], static_cast<std::uint64_t>(e[i]));
        out = out + term;
    }
    return out;
}

Polynomial pow(const Polynomial& p, std::uint64_t exponent) {
    Polynomial result = Polynomial::constant(p.vars(), Rational(1));
    Polynomial base = p;
    while (exponent > 0) {
        if (exponent & 1)
            result = result * base;
        exponent >>= 1;
        if (exponent > 0)
            base = base * base;
    }
    return result;
}

} // namespace selim
