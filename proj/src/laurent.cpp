#include "shioda/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace shioda {

namespace {

// canonical order: t_deg ascending, then exponent vector lex descending
bool key_less(unsigned long t1, const IntVec& e1, unsigned long t2, const IntVec& e2) {
    if (t1 != t2) return t1 < t2;
    return std::lexicographical_compare(e2.begin(), e2.end(), e1.begin(), e1.end());
}

}  // namespace

void ParamLaurentPoly::add_term(Int coeff, unsigned long t_deg, IntVec expo) {
    if (expo.size() != vars_) throw std::invalid_argument("ParamLaurentPoly: exponent length mismatch");
    if (coeff == 0) return;
    auto pos = std::lower_bound(terms_.begin(), terms_.end(), std::make_pair(t_deg, expo),
                                [](const LaurentTerm& t, const std::pair<unsigned long, IntVec>& k) {
                                    return key_less(t.t_deg, t.expo, k.first, k.second);
                                });
    if (pos != terms_.end() && pos->t_deg == t_deg && pos->expo == expo) {
        pos->coeff += coeff;
        if (pos->coeff == 0) terms_.erase(pos);
        return;
    }
    terms_.insert(pos, LaurentTerm{std::move(coeff), t_deg, std::move(expo)});
}

ParamLaurentPoly ParamLaurentPoly::operator+(const ParamLaurentPoly& rhs) const {
    if (vars_ != rhs.vars_) throw std::invalid_argument("ParamLaurentPoly: variable count mismatch");
    ParamLaurentPoly out = *this;
    for (const LaurentTerm& t : rhs.terms_) out.add_term(t.coeff, t.t_deg, t.expo);
    return out;
}

ParamLaurentPoly ParamLaurentPoly::operator-() const {
    ParamLaurentPoly out(vars_);
    for (const LaurentTerm& t : terms_) out.add_term(-t.coeff, t.t_deg, t.expo);
    return out;
}

std::string ParamLaurentPoly::to_string(const std::string& var_prefix, std::size_t index_base) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const LaurentTerm& t : terms_) {
        Int c = t.coeff;
        if (first) {
            if (c < 0) {
                out << "-";
                c = -c;
            }
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        std::vector<std::string> factors;
        if (c != 1) factors.push_back(c.get_str());
        if (t.t_deg == 1)
            factors.push_back("t");
        else if (t.t_deg > 1)
            factors.push_back("t^" + std::to_string(t.t_deg));
        for (std::size_t j = 0; j < t.expo.size(); ++j) {
            if (t.expo[j] == 0) continue;
            std::string f = var_prefix + std::to_string(index_base + j);
            if (t.expo[j] != 1) f += "^" + t.expo[j].get_str();
            factors.push_back(f);
        }
        if (factors.empty()) factors.push_back(c.get_str());  // constant term
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (i) out << "*";
            out << factors[i];
        }
    }
    return out.str();
}

}  // namespace shioda
