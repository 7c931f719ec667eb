#include "superirr/serialize.hpp"

namespace superirr {

namespace {

ordered_json coeff_array(const std::vector<Rational>& cs) {
    ordered_json a = ordered_json::array();
    for (const auto& c : cs) a.push_back(c.get_str());
    return a;
}

ordered_json coeff_array(const std::vector<Integer>& cs) {
    ordered_json a = ordered_json::array();
    for (const auto& c : cs) a.push_back(c.get_str());
    return a;
}

std::vector<std::string> rule_refs(const std::string& rule) {
    if (rule == "descent-x4-y4")
        return {"X^4 + Y^4 = Z^2 has no nontrivial rational solutions (Fermat descent)"};
    if (rule == "descent-x4-2y4")
        return {"X^4 + 2Y^4 = Z^2 has no nontrivial rational solutions (classical descent)"};
    if (rule == "residue-p-mod16")
        return {"x^4 + p with p prime, p = 7 or 11 (mod 16): norm equation insolvable"};
    if (rule == "residue-2p-mod8")
        return {"x^4 + 2p with p prime, p = 3 or 5 (mod 8): norm equation insolvable"};
    if (rule == "residue-4p-negp-mod16")
        return {"x^4 + 4p and x^4 - p with p prime, p = 3, 11 or 13 (mod 16): norm "
                "equation insolvable"};
    if (rule == "legendre")
        return {"a x^2 + b y^2 = z^2 has no nontrivial solution unless a is a square "
                "mod b and b is a square mod a (Legendre; Ireland-Rosen Prop. 17.3.1)"};
    return {};
}

}  // namespace

ordered_json json_of(const IntPoly& f) {
    ordered_json j;
    j["expr"] = f.to_string();
    j["coeffs"] = coeff_array(f.coeffs());
    return j;
}

ordered_json json_of(const RatPoly& f) {
    ordered_json j;
    j["expr"] = f.to_string();
    j["coeffs"] = coeff_array(f.coeffs());
    return j;
}

ordered_json json_of(const SubstitutionWitness& w) {
    ordered_json j;
    j["substitution"] = json_of(w.substitution);
    j["divisor"] = json_of(w.divisor);
    j["cofactor"] = json_of(w.cofactor);
    j["scalar"] = w.scalar.get_str();
    return j;
}

ordered_json json_of(const Factorization& f) {
    ordered_json j;
    j["unit"] = f.unit.get_str();
    ordered_json fs = ordered_json::array();
    for (const auto& [q, e] : f.factors) {
        ordered_json item;
        item["poly"] = json_of(q);
        item["multiplicity"] = e;
        fs.push_back(item);
    }
    j["factors"] = fs;
    return j;
}

ordered_json json_of(const Certificate& c) {
    ordered_json j;
    j["input"] = json_of(c.input);
    j["status"] = to_string(c.status);
    j["rule"] = c.rule ? ordered_json(*c.rule) : ordered_json(nullptr);
    ordered_json refs = ordered_json::array();
    if (c.rule)
        for (const auto& r : rule_refs(*c.rule)) refs.push_back(r);
    j["refs"] = refs;
    if (c.triple) {
        j["dioph_witness"] =
            ordered_json::array({c.triple->x.get_str(), c.triple->y.get_str(),
                                 c.triple->z.get_str()});
    } else {
        j["dioph_witness"] = nullptr;
    }
    j["substitution_witness"] =
        c.witness ? json_of(*c.witness) : ordered_json(nullptr);
    ordered_json bounds;
    bounds["diophantine"] = c.bounds.diophantine_bound.get_str();
    bounds["witness_coeff"] = c.bounds.witness_coeff_bound;
    bounds["witness_denom"] = c.bounds.witness_denom_bound;
    j["search_bounds"] = bounds;
    j["dioph_constant"] = c.dioph_constant.get_str();
    j["note"] = c.note;
    return j;
}

ordered_json json_of(const SearchReport& r) {
    ordered_json j;
    j["mode"] = r.mode == SearchMode::integer_box ? "integer" : "rational";
    j["target"] = json_of(r.target);
    j["coeff_bound"] = r.coeff_bound;
    j["denom_bound"] = r.denom_bound;
    ordered_json ws = ordered_json::array();
    for (const auto& w : r.witnesses) ws.push_back(json_of(w));
    j["witnesses"] = ws;
    j["exhausted"] = r.exhausted;
    j["completed_slices"] = r.completed_slices;
    j["total_slices"] = r.total_slices;
    j["compositions_tested"] = r.compositions_tested;
    j["digest"] = r.digest;
    return j;
}

ordered_json json_of(const CongruenceReport& r) {
    ordered_json j;
    j["k"] = r.k;
    j["modulus"] = r.modulus;
    j["vectors_checked"] = r.vectors_checked;
    ordered_json vs = ordered_json::array();
    for (const auto& v : r.violations) vs.push_back(v);
    j["violations"] = vs;
    j["passed"] = r.passed();
    return j;
}

ordered_json json_of(const WeakCheckReport& r) {
    ordered_json j;
    j["k"] = r.k;
    j["bound"] = r.bound.get_str();
    j["pairs_checked"] = r.pairs_checked;
    ordered_json cs = ordered_json::array();
    for (const auto& c : r.counterexamples) {
        ordered_json item;
        item["a"] = c.a.get_str();
        item["b"] = c.b.get_str();
        item["power"] = c.power;
        cs.push_back(item);
    }
    j["counterexamples"] = cs;
    j["passed"] = r.passed();
    return j;
}

RatPoly rat_poly_from_json(const ordered_json& j) {
    std::vector<Rational> cs;
    for (const auto& c : j.at("coeffs")) {
        Rational r(c.get<std::string>());
        r.canonicalize();
        cs.push_back(r);
    }
    return RatPoly(std::move(cs));
}

SubstitutionWitness witness_from_json(const ordered_json& j) {
    SubstitutionWitness w;
    w.substitution = rat_poly_from_json(j.at("substitution"));
    w.divisor = rat_poly_from_json(j.at("divisor")).to_int();
    w.cofactor = rat_poly_from_json(j.at("cofactor")).to_int();
    Rational s(j.at("scalar").get<std::string>());
    s.canonicalize();
    w.scalar = s;
    return w;
}

}  // namespace superirr
