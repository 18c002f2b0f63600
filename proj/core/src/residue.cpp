#include "lhuilier/residue.hpp"

#include <stdexcept>

namespace lhuilier {

std::int64_t ResidueComponent::modulus() const { return ipow(p, e); }

std::int64_t ResidueComponent::residue() const { return bar * ipow(p, e - 1) + hat; }

std::string ResidueComponent::str() const {
    if (!is_pair()) return std::to_string(bar);
    return "(" + std::to_string(bar) + "," + std::to_string(hat) + ")";
}

std::string ResidueForm::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < components.size(); ++i) {
        if (i) s += ",";
        s += components[i].str();
    }
    return s + ")_" + std::to_string(level);
}

ResidueForm residue_form(std::int64_t n, std::int64_t a) {
    if (n < 2) throw std::invalid_argument("residue_form: level must be at least 2");
    if (mod_floor(a, n) == 0) throw std::invalid_argument("residue_form: level divides the index");
    ResidueForm f;
    f.level = n;
    for (const auto& pp : factorize(n)) {
        ResidueComponent c;
        c.p = pp.p;
        c.e = pp.e;
        std::int64_t low = ipow(pp.p, pp.e - 1);
        std::int64_t tilde = mod_floor(a, pp.power());
        c.hat = mod_floor(a, low);
        c.bar = (tilde - c.hat) / low;
        f.components.push_back(c);
    }
    return f;
}

std::int64_t residue_to_index(const ResidueForm& f) {
    std::int64_t n = f.level;
    __int128 acc = 0;
    for (const auto& c : f.components) {
        std::int64_t q = c.modulus();
        std::int64_t rest = n / q;
        std::int64_t coef = mod_inverse(rest % q, q);
        acc += static_cast<__int128>(c.residue()) * rest % n * coef % n;
        acc %= n;
    }
    return static_cast<std::int64_t>(acc);
}

ResidueForm make_residue_form(std::int64_t n, const std::vector<std::vector<std::int64_t>>& values) {
    auto fac = factorize(n);
    if (fac.size() != values.size()) throw std::invalid_argument("make_residue_form: component count mismatch");
    ResidueForm f;
    f.level = n;
    for (std::size_t i = 0; i < fac.size(); ++i) {
        ResidueComponent c;
        c.p = fac[i].p;
        c.e = fac[i].e;
        const auto& v = values[i];
        if (c.e == 1) {
            if (v.size() != 1 || v[0] < 0 || v[0] >= c.p)
                throw std::invalid_argument("make_residue_form: bad simple component");
            c.bar = v[0];
        } else {
            if (v.size() != 2 || v[0] < 0 || v[0] >= c.p || v[1] < 0 || v[1] >= ipow(c.p, c.e - 1))
                throw std::invalid_argument("make_residue_form: bad pair component");
            c.bar = v[0];
            c.hat = v[1];
        }
        f.components.push_back(c);
    }
    return f;
}

}  // namespace lhuilier
