#include "theta5/io.hpp"

#include <sstream>

namespace theta5 {

json int_json(const Int& x) {
    if (x.fits_slong_p()) return x.get_si();
    return x.get_str();
}

json rational_json(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

json matrix_json(const SL2Matrix& m) {
    return json{{"a", int_json(m.a)}, {"b", int_json(m.b)}, {"c", int_json(m.c)}, {"d", int_json(m.d)}};
}

json rou_json(const RootOfUnity& r) {
    return json{{"num", int_json(r.num())}, {"den", int_json(r.den())}};
}

json residue_json(const ResidueMatrix& m) {
    return json{{"a", int_json(m.a)}, {"b", int_json(m.b)}, {"c", int_json(m.c)},
                {"d", int_json(m.d)}, {"mod", int_json(m.modulus)}};
}

json char_json(const ThetaChar& ch) {
    return json{{"eps", rational_json(ch.eps)}, {"eps_prime", rational_json(ch.eps_prime)}};
}

json cusp_json(const Cusp& c) {
    return json{{"p", int_json(c.p)}, {"q", int_json(c.q)}, {"point", c.text()}};
}

json transform_json(const TransformData& td) {
    return json{{"new_char", char_json(td.new_char)},
                {"eta_cube", rou_json(td.eta_cube)},
                {"extra_phase", rou_json(td.extra_phase)},
                {"weight", rational_json(td.weight)},
                {"gaussian_c", int_json(td.gaussian_c)}};
}

json multiplier_json(const MultiplierResult& mr) {
    return json{{"value", rou_json(mr.value)}, {"exponent", int_json(mr.exponent)},
                {"case", to_string(mr.rc)}};
}

json coset_table_json(const CosetTable& t) {
    json reps = json::array();
    for (const auto& m : t.reps) reps.push_back(matrix_json(m));
    return json{{"group", t.group_label}, {"count", t.reps.size()}, {"reps", reps}};
}

namespace {
Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(j.get<long>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw std::invalid_argument("expected an integer or integer string");
}
}  // namespace

SL2Matrix matrix_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("matrix JSON must be an object");
    return {int_from_json(j.at("a")), int_from_json(j.at("b")), int_from_json(j.at("c")),
            int_from_json(j.at("d"))};
}

SL2Matrix parse_matrix_arg(const std::string& s) {
    auto first = s.find_first_not_of(" \t");
    if (first != std::string::npos && s[first] == '{')
        return matrix_from_json(json::parse(s));
    return SL2Matrix::from_text(s);
}

ThetaChar parse_char_arg(const std::string& s) {
    std::istringstream is(s);
    std::string e, ep, rest;
    if (!(is >> e >> ep) || (is >> rest))
        throw std::invalid_argument("characteristic must be two rationals: '" + s + "'");
    return {parse_rational(e), parse_rational(ep)};
}

}  // namespace theta5
