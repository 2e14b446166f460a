#ifndef THETA5_IO_HPP
#define THETA5_IO_HPP

#include <json.hpp>

#include "theta5/core.hpp"
#include "theta5/gamma5.hpp"
#include "theta5/theta.hpp"
#include "theta5/transform.hpp"

namespace theta5 {

using json = nlohmann::ordered_json;

json int_json(const Int& x);           // number if it fits, string otherwise
json rational_json(const Rat& r);      // "p/q" or "n"
json matrix_json(const SL2Matrix& m);  // {"a":..,"b":..,"c":..,"d":..}
json rou_json(const RootOfUnity& r);   // {"num":p,"den":q} meaning e^{i pi p/q}
json residue_json(const ResidueMatrix& m);
json char_json(const ThetaChar& ch);
json cusp_json(const Cusp& c);
json transform_json(const TransformData& td);
json multiplier_json(const MultiplierResult& mr);
json coset_table_json(const CosetTable& t);

SL2Matrix matrix_from_json(const json& j);
// Accepts either the text form "a b c d" or a JSON object.
SL2Matrix parse_matrix_arg(const std::string& s);
ThetaChar parse_char_arg(const std::string& s);  // "eps eps'"

}  // namespace theta5

#endif
