#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace quadcusp {

enum class Errc {
  parse,
  invalid_argument,
  zero_form,
  small_characteristic,
  even_characteristic,
  both_zero,
  not_a_square,
  branch_zero,
  point_not_on_line,
  point_not_on_curve,
  vertex_support,
  zero_tangent,
  degree_negative,
  empty_system,
  retries_exhausted,
  center_on_curve,
  center_is_vertex,
  singular_point,
  degenerate_bidegree,
  not_coprime,
  non_effective,
  zero_space,
  special_point,
  coincident_q,
  not_weierstrass,
  overlapping_support,
  d_too_small,
  unsupported_field,
};

constexpr std::string_view errc_name(Errc e) {
  switch (e) {
    case Errc::parse: return "ParseError";
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::zero_form: return "ZeroForm";
    case Errc::small_characteristic: return "SmallCharacteristic";
    case Errc::even_characteristic: return "EvenCharacteristic";
    case Errc::both_zero: return "BothZero";
    case Errc::not_a_square: return "NotASquare";
    case Errc::branch_zero: return "BranchZero";
    case Errc::point_not_on_line: return "PointNotOnLine";
    case Errc::point_not_on_curve: return "PointNotOnCurve";
    case Errc::vertex_support: return "VertexSupport";
    case Errc::zero_tangent: return "ZeroTangent";
    case Errc::degree_negative: return "DegreeNegative";
    case Errc::empty_system: return "EmptySystem";
    case Errc::retries_exhausted: return "RetriesExhausted";
    case Errc::center_on_curve: return "CenterOnCurve";
    case Errc::center_is_vertex: return "CenterIsVertex";
    case Errc::singular_point: return "SingularPoint";
    case Errc::degenerate_bidegree: return "DegenerateBidegree";
    case Errc::not_coprime: return "NotCoprime";
    case Errc::non_effective: return "NonEffective";
    case Errc::zero_space: return "ZeroSpace";
    case Errc::special_point: return "SpecialP";
    case Errc::coincident_q: return "CoincidentQ";
    case Errc::not_weierstrass: return "NotWeierstrass";
    case Errc::overlapping_support: return "OverlappingSupport";
    case Errc::d_too_small: return "DTooSmall";
    case Errc::unsupported_field: return "UnsupportedField";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, Errc code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace quadcusp
