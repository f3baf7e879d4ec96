#include "gq3/params.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "gq3/error.hpp"

namespace gq3 {

std::string format_real(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ParamMismatch: return "ParamMismatch";
    case ErrorCode::ZeroNorm: return "ZeroNorm";
    case ErrorCode::NonElliptic: return "NonElliptic";
    case ErrorCode::DegenerateAxis: return "DegenerateAxis";
    case ErrorCode::NonUnit: return "NonUnit";
    case ErrorCode::NotUnitVector: return "NotUnitVector";
    case ErrorCode::NotPositiveFamily: return "NotPositiveFamily";
    case ErrorCode::NoPeriod: return "NoPeriod";
    case ErrorCode::CongruenceViolation: return "CongruenceViolation";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

ParamTriple::ParamTriple(double lambda1, double lambda2, double lambda3)
    : l1_(lambda1), l2_(lambda2), l3_(lambda3) {
  if (!std::isfinite(l1_) || !std::isfinite(l2_) || !std::isfinite(l3_))
    throw Error(ErrorCode::InvalidArgument, "lambda parameters must be finite");
}

double ParamTriple::max_weight() const noexcept {
  return std::max({std::abs(w1()), std::abs(w2()), std::abs(w3())});
}

ParamTriple family(Family name, double lambda, double mu) {
  switch (name) {
    case Family::TwoParam: return {1.0, lambda, mu};
    case Family::Split: return {1.0, 1.0, -1.0};
    case Family::Hamilton: return {1.0, 1.0, 1.0};
    case Family::Semi: return {1.0, 1.0, 0.0};
    case Family::SplitSemi: return {1.0, -1.0, 0.0};
    case Family::Quarter: return {1.0, 0.0, 0.0};
  }
  throw Error(ErrorCode::InvalidArgument, "unknown family");
}

namespace {

double parse_double(std::string_view s) {
  std::string buf(s);
  char* end = nullptr;
  double v = std::strtod(buf.c_str(), &end);
  if (buf.empty() || end != buf.c_str() + buf.size() || !std::isfinite(v))
    throw Error(ErrorCode::InvalidArgument,
                "not a finite number: '" + buf + "'");
  return v;
}

}  // namespace

ParamTriple family_from_name(std::string_view name) {
  if (name == "hamilton") return family(Family::Hamilton);
  if (name == "split") return family(Family::Split);
  if (name == "semi") return family(Family::Semi);
  if (name == "split-semi") return family(Family::SplitSemi);
  if (name == "quarter") return family(Family::Quarter);
  constexpr std::string_view prefix = "2param:";
  if (name.substr(0, prefix.size()) == prefix) {
    auto rest = name.substr(prefix.size());
    auto comma = rest.find(',');
    if (comma != std::string_view::npos)
      return family(Family::TwoParam, parse_double(rest.substr(0, comma)),
                    parse_double(rest.substr(comma + 1)));
  }
  throw Error(ErrorCode::InvalidArgument,
              "unknown family '" + std::string(name) + "'");
}

void require_same(const ParamTriple& a, const ParamTriple& b) {
  if (!(a == b))
    throw Error(ErrorCode::ParamMismatch,
                "operands belong to different parameter triples");
}

}  // namespace gq3
