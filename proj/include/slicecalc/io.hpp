#pragma once

#include <string>
#include <variant>

#include "slicecalc/clifford_op.hpp"
#include "slicecalc/qmatrix.hpp"
#include "slicecalc/slice_function.hpp"

namespace slicecalc {

// Operator file: a JSON document of kind "quaternion-matrix" (entries as
// [w,x,y,z] quadruples) or "paravector" (n+1 real matrices). Finite values
// round-trip bit-exactly.
using LoadedOperator = std::variant<QMatrix, ParavectorOperator>;

LoadedOperator load_operator(const std::string& path);
LoadedOperator parse_operator(const std::string& text);
std::string serialize_operator(const QMatrix& A);
std::string serialize_operator(const ParavectorOperator& T);
void save_operator(const std::string& path, const LoadedOperator& op);

// Function spec mini-language:
//   psi(2)  pow(3)  frac_pow(0.5)  exp_neg  one
//   poly([c0,c1,...])                      real coefficients, intrinsic
//   rational([p0,p1,...],[q0,q1,...])      real coefficients, intrinsic
//   poly_left([[w,x,y,z],...])             quaternionic coefficients
//   poly_right([[w,x,y,z],...])
//   left:poly([[w,x,y,z],...])             side prefix form
SliceFunction parse_function_spec(const std::string& text);

std::string format_quaternion(const Quaternion& q, int digits = 17);

}  // namespace slicecalc
