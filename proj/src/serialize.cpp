#include "macpoly/serialize.hpp"

#include <cctype>

namespace macpoly {

namespace {

// Canonical expanded-sum string to LaTeX body: '*' becomes a thin space,
// alpha becomes \alpha, multi-digit exponents get braces.
std::string latex_body(const std::string& s) {
    std::string out;
    size_t i = 0;
    while (i < s.size()) {
        if (s.compare(i, 5, "alpha") == 0) {
            out += "\\alpha";
            i += 5;
        } else if (s[i] == '*') {
            out += ' ';
            ++i;
        } else if (s[i] == '^') {
            size_t j = i + 1;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            if (j - i > 2) {
                out += "^{";
                out.append(s, i + 1, j - i - 1);
                out += '}';
            } else {
                out.append(s, i, j - i);
            }
            i = j;
        } else {
            out += s[i++];
        }
    }
    return out;
}

std::string latex_index(size_t v) {
    const std::string d = std::to_string(v);
    return d.size() > 1 ? "{" + d + "}" : d;
}

std::string latex_monomial(const Monomial& e) {
    std::string out;
    for (size_t k = 0; k < e.size(); ++k) {
        if (e[k] == 0) continue;
        if (!out.empty()) out += ' ';
        out += "x_" + latex_index(k + 1);
        if (e[k] != 1) out += "^" + latex_index(static_cast<size_t>(e[k]));
    }
    return out;
}

}  // namespace

nlohmann::ordered_json poly_to_json(const Polynomial& f) {
    nlohmann::ordered_json j;
    j["n"] = f.n();
    j["params"] = f.params();
    auto terms = nlohmann::ordered_json::array();
    for (const auto& [e, c] : f.terms()) {
        nlohmann::ordered_json t;
        t["exp"] = e;
        t["coeff"] = c.str();
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

std::string latex_coefficient(const RationalFunction& c) {
    if (c.den().is_one()) return latex_body(c.num().str());
    return "\\frac{" + latex_body(c.num().str()) + "}{" + latex_body(c.den().str()) + "}";
}

std::string poly_to_latex(const Polynomial& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : f.terms()) {
        if (!first) out += " + ";
        first = false;
        const std::string mono = latex_monomial(e);
        if (mono.empty()) {
            out += latex_coefficient(c);
        } else if (c.is_one()) {
            out += mono;
        } else if (c.den().is_one() && !c.num().is_monomial()) {
            out += "(" + latex_coefficient(c) + ") " + mono;
        } else {
            out += latex_coefficient(c) + " " + mono;
        }
    }
    return out;
}

}  // namespace macpoly
