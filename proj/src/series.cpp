#include <selim/series.hpp>

#include <selim/error.hpp>

#include <algorithm>
#include <utility>

namespace selim {

TruncatedSeries::TruncatedSeries(std::vector<std::string> vars, ExponentVector cap)
    : vars_(std::move(vars)), cap_(std::move(cap)) {
    if (cap_.size() != vars_.size())
        throw dimension_error("cap length does not match variable count");
    for (std::int64_t c : cap_)
        if (c < 0)
            throw domain_error("series cap entries must be nonnegative");
}

TruncatedSeries TruncatedSeries::one(std::vector<std::string> vars, ExponentVector cap) {
    TruncatedSeries s(std::move(vars), std::move(cap));
    s.set_coeff(ExponentVector(s.nvars(), 0), Rational(1));
    return s;
}

TruncatedSeries TruncatedSeries::from_polynomial(const Polynomial& p, ExponentVector cap) {
    if (p.has_negative_exponents())
        throw domain_error("series truncation requires nonnegative exponents");
    TruncatedSeries s(p.vars(), std::move(cap));
    for (const auto& [e, c] : p.terms())
        if (s.in_box(e))
            s.set_coeff(e, c);
    return s;
}

bool TruncatedSeries::in_box(const ExponentVector& exps) const {
    if (exps.size() != cap_.size())
        return false;
    for (std::size_t i = 0; i < exps.size(); ++i)
        if (exps[i] < 0 || exps[i] > cap_[i])
            return false;
    return true;
}

Rational TruncatedSeries::coeff(const ExponentVector& exps) const {
    const auto it = terms_.find(exps);
    return it == terms_.end() ? Rational(0) : it->second;
}

void TruncatedSeries::set_coeff(const ExponentVector& exps, const Rational& value) {
    if (!in_box(exps))
        throw dimension_error("exponent vector outside the series cap");
    if (value == 0)
        terms_.erase(exps);
    else
        terms_[exps] = value;
}

Polynomial TruncatedSeries::to_polynomial() const {
    Polynomial p(vars_);
    for (const auto& [e, c] : terms_)
        p.add_term(e, c);
    return p;
}

bool TruncatedSeries::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == ExponentVector(nvars(), 0) &&
           terms_.begin()->second == 1;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.cap() != b.cap() || a.vars() != b.vars())
        throw dimension_error("series caps or variable lists differ");
    TruncatedSeries out(a.vars(), a.cap());
    std::map<ExponentVector, Rational> acc;
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms()) {
            ExponentVector e = exp_add(ea, eb);
            if (!out.in_box(e))
                continue;
            acc[std::move(e)] += ca * cb;
        }
    for (const auto& [e, c] : acc)
        out.set_coeff(e, c);
    return out;
}

std::vector<ExponentVector> lattice_box(const ExponentVector& cap) {
    std::size_t total = 1;
    for (std::int64_t c : cap) {
        if (c < 0)
            throw domain_error("box bounds must be nonnegative");
        const auto width = static_cast<std::size_t>(c) + 1;
        if (total > (std::size_t(1) << 24) / width)
            throw resource_error("truncation box too large");
        total *= width;
    }

    std::vector<ExponentVector> points;
    points.reserve(total);
    ExponentVector current(cap.size(), 0);
    while (true) {
        points.push_back(current);
        std::size_t i = 0;
        for (; i < cap.size(); ++i) {
            if (current[i] < cap[i]) {
                ++current[i];
                break;
            }
            current[i] = 0;
        }
        if (i == cap.size())
            break;
    }
    std::sort(points.begin(), points.end(), graded_lex_less);
    return points;
}

TruncatedSeries series_reciprocal(const Polynomial& p, const ExponentVector& cap) {
    if (p.has_negative_exponents())
        throw domain_error("series reciprocal requires nonnegative exponents");
    if (cap.size() != p.nvars())
        throw dimension_error("cap length does not match variable count");

    const ExponentVector zero(p.nvars(), 0);
    const Rational constant = p.coeff(zero);
    if (constant == 0)
        throw domain_error("series reciprocal: constant term is zero, not invertible");

    // in-box support of p, constant term excluded
    TruncatedSeries out(p.vars(), cap);
    std::vector<std::pair<ExponentVector, Rational>> support;
    for (const auto& [e, c] : p.terms())
        if (e != zero && out.in_box(e))
            support.emplace_back(e, c);

    for (const ExponentVector& e : lattice_box(cap)) {
        if (e == zero) {
            out.set_coeff(zero, Rational(1) / constant);
            continue;
        }
        Rational acc(0);
        for (const auto& [d, c] : support) {
            ExponentVector rest(e.size());
            bool fits = true;
            for (std::size_t i = 0; i < e.size(); ++i) {
                rest[i] = e[i] - d[i];
                if (rest[i] < 0) {
                    fits = false;
                    break;
                }
            }
            if (!fits)
                continue;
            const Rational q = out.coeff(rest);
            if (q != 0)
                acc += c * q;
        }
        if (acc != 0)
            out.set_coeff(e, -acc / constant);
    }
    return out;
}

} // namespace selim
