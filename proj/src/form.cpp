#include "weilzeta/form.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "weilzeta/error.hpp"

namespace weilzeta {

Form::Form(unsigned nvars, std::vector<Term> terms) : nvars_(nvars) {
    std::map<std::vector<unsigned>, BigInt, std::greater<>> merged;
    for (auto& t : terms) {
        if (t.exps.size() > nvars) {
            for (std::size_t i = nvars; i < t.exps.size(); ++i)
                if (t.exps[i] != 0) throw Error(ErrorKind::InvalidArgument, "variable index out of range");
            t.exps.resize(nvars);
        }
        t.exps.resize(nvars, 0);
        merged[t.exps] += t.coeff;
    }
    for (auto& [exps, c] : merged)
        if (c != 0) terms_.push_back(Term{c, exps});
}

bool Form::is_homogeneous() const {
    if (terms_.empty()) return true;
    const unsigned d = terms_.front().degree();
    return std::all_of(terms_.begin(), terms_.end(), [d](const Term& t) { return t.degree() == d; });
}

unsigned Form::degree() const { return terms_.empty() ? 0 : terms_.front().degree(); }

int Form::max_variable() const {
    int m = -1;
    for (const auto& t : terms_)
        for (std::size_t i = 0; i < t.exps.size(); ++i)
            if (t.exps[i] != 0) m = std::max(m, static_cast<int>(i));
    return m;
}

Form Form::derivative(unsigned var) const {
    std::vector<Term> out;
    for (const auto& t : terms_) {
        if (var >= t.exps.size() || t.exps[var] == 0) continue;
        Term d = t;
        d.coeff *= t.exps[var];
        d.exps[var] -= 1;
        out.push_back(std::move(d));
    }
    return Form(nvars_, std::move(out));
}

Form Form::widened(unsigned nvars) const {
    if (nvars < nvars_ && max_variable() >= static_cast<int>(nvars))
        throw Error(ErrorKind::InvalidArgument, "cannot narrow a form that uses higher variables");
    return Form(nvars, terms_);
}

std::string Form::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        BigInt mag = abs(t.coeff);
        if (first) {
            if (t.coeff < 0) os << "-";
        } else {
            os << (t.coeff < 0 ? " - " : " + ");
        }
        first = false;
        bool has_var = t.degree() > 0;
        bool wrote = false;
        if (mag != 1 || !has_var) {
            os << mag.get_str();
            wrote = true;
        }
        for (std::size_t i = 0; i < t.exps.size(); ++i) {
            if (t.exps[i] == 0) continue;
            if (wrote) os << "*";
            os << "x" << i;
            if (t.exps[i] > 1) os << "^" << t.exps[i];
            wrote = true;
        }
    }
    return os.str();
}

}  // namespace weilzeta
