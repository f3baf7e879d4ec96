#include "cli.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <string_view>

#include <CLI11.hpp>

#include "gq3/gq3.h"

namespace gq3cli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DomainError : std::runtime_error {
  DomainError(std::string code, const std::string& message)
      : std::runtime_error(message), code(std::move(code)) {}
  std::string code;
};

std::vector<double> parse_numbers(std::string_view text, std::size_t count,
                                  std::string_view what) {
  std::vector<double> values;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string token(text.substr(start, end - start));
    char* stop = nullptr;
    errno = 0;
    const double v = std::strtod(token.c_str(), &stop);
    if (token.empty() || stop != token.c_str() + token.size() || errno == ERANGE ||
        !std::isfinite(v))
      throw UsageError("malformed number '" + token + "' in " +
                       std::string(what));
    values.push_back(v);
    start = end + 1;
  }
  if (values.size() != count)
    throw UsageError(std::string(what) + " needs " + std::to_string(count) +
                     " comma-separated numbers, got " +
                     std::to_string(values.size()));
  return values;
}

using ContextPtr = std::unique_ptr<gq3_context, decltype(&gq3_context_destroy)>;

void check(gq3_status status, gq3_context* ctx) {
  if (status != GQ3_OK)
    throw DomainError(gq3_status_string(status), gq3_last_error(ctx));
}

gq3_params params_from_text(gq3_context* ctx, std::string_view text) {
  const auto v = parse_numbers(text, 3, "parameter triple");
  gq3_params p;
  if (gq3_params_make(ctx, v[0], v[1], v[2], &p) != GQ3_OK)
    throw UsageError(gq3_last_error(ctx));
  return p;
}

enum class Kind { Quat, Vec, Scalar, Mat4 };

struct Call {
  gq3_context* ctx;
  std::optional<gq3_params> params;
  const Request& request;
  std::vector<std::string> operands;

  // Splits "numbers@l1,l2,l3" into the numbers and the operand's own params.
  std::pair<std::vector<double>, gq3_params> operand(std::size_t i,
                                                     std::size_t count) const {
    std::string_view text = operands.at(i);
    gq3_params p = params.value_or(gq3_params{1, 1, 1});
    const auto at = text.find('@');
    if (at != std::string_view::npos) {
      p = params_from_text(ctx, text.substr(at + 1));
      text = text.substr(0, at);
    }
    return {parse_numbers(text, count, "operand " + std::to_string(i + 1)), p};
  }

  gq3_quat quat(std::size_t i) const {
    auto [v, p] = operand(i, 4);
    return {p, {v[0], v[1], v[2], v[3]}};
  }
  gq3_vec3 vec(std::size_t i) const {
    auto [v, p] = operand(i, 3);
    return {p, {v[0], v[1], v[2]}};
  }
  double scalar(std::size_t i) const { return operand(i, 1).first[0]; }
  gq3_mat4 mat4(std::size_t i) const {
    auto v = operand(i, 16).first;
    gq3_mat4 m;
    for (std::size_t k = 0; k < 16; ++k) m.m[k] = v[k];
    return m;
  }
  int n() const { return *request.n; }
  int s() const { return *request.s; }
  double theta() const { return *request.theta; }
};

struct OpSpec {
  std::vector<Kind> operands;
  bool needs_params = true;
  bool needs_n = false;
  bool needs_s = false;
  bool needs_theta = false;
  std::function<Json(Call&)> body;
};

Json quat_json(const gq3_quat& q) { return Json::array({q.c[0], q.c[1], q.c[2], q.c[3]}); }
Json vec_json(const gq3_vec3& v) { return Json::array({v.c[0], v.c[1], v.c[2]}); }
Json complex_json(const gq3_complex& c) { return Json::array({c.re, c.im}); }

template <std::size_t N>
Json rows_json(const double* m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < N; ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < N; ++c) row.push_back(m[r * N + c]);
    rows.push_back(row);
  }
  return rows;
}
Json mat4_json(const gq3_mat4& m) { return rows_json<4>(m.m); }
Json mat3_json(const gq3_mat3& m) { return rows_json<3>(m.m); }

Json tagged(const char* tag, Json value) {
  Json j = Json::object();
  j[tag] = std::move(value);
  return j;
}

using QQ = gq3_status (*)(gq3_context*, const gq3_quat*, const gq3_quat*, gq3_quat*);
using VV = gq3_status (*)(gq3_context*, const gq3_vec3*, const gq3_vec3*, gq3_vec3*);
using VVV = gq3_status (*)(gq3_context*, const gq3_vec3*, const gq3_vec3*,
                           const gq3_vec3*, gq3_vec3*);
using QM4 = gq3_status (*)(gq3_context*, const gq3_quat*, gq3_mat4*);
using VM3 = gq3_status (*)(gq3_context*, const gq3_vec3*, gq3_mat3*);
using PM3 = gq3_status (*)(gq3_context*, const gq3_params*, gq3_mat3*);

OpSpec quat_binary(QQ f) {
  return {{Kind::Quat, Kind::Quat}, true, false, false, false, [f](Call& c) {
            const auto p = c.quat(0), q = c.quat(1);
            gq3_quat out;
            check(f(c.ctx, &p, &q, &out), c.ctx);
            return tagged("quat", quat_json(out));
          }};
}

OpSpec quat_unary(gq3_status (*f)(gq3_context*, const gq3_quat*, gq3_quat*)) {
  return {{Kind::Quat}, true, false, false, false, [f](Call& c) {
            const auto p = c.quat(0);
            gq3_quat out;
            check(f(c.ctx, &p, &out), c.ctx);
            return tagged("quat", quat_json(out));
          }};
}

OpSpec vec_binary(VV f) {
  return {{Kind::Vec, Kind::Vec}, true, false, false, false, [f](Call& c) {
            const auto u = c.vec(0), v = c.vec(1);
            gq3_vec3 out;
            check(f(c.ctx, &u, &v, &out), c.ctx);
            return tagged("vector", vec_json(out));
          }};
}

OpSpec vec_ternary(VVV f) {
  return {{Kind::Vec, Kind::Vec, Kind::Vec}, true, false, false, false,
          [f](Call& c) {
            const auto p = c.vec(0), q = c.vec(1), r = c.vec(2);
            gq3_vec3 out;
            check(f(c.ctx, &p, &q, &r, &out), c.ctx);
            return tagged("vector", vec_json(out));
          }};
}

OpSpec quat_to_mat4(QM4 f) {
  return {{Kind::Quat}, true, false, false, false, [f](Call& c) {
            const auto p = c.quat(0);
            gq3_mat4 out;
            check(f(c.ctx, &p, &out), c.ctx);
            return tagged("mat4", mat4_json(out));
          }};
}

OpSpec vec_to_mat3(VM3 f) {
  return {{Kind::Vec}, true, false, false, false, [f](Call& c) {
            const auto v = c.vec(0);
            gq3_mat3 out;
            check(f(c.ctx, &v, &out), c.ctx);
            return tagged("mat3", mat3_json(out));
          }};
}

OpSpec params_to_mat3(PM3 f) {
  return {{}, true, false, false, false, [f](Call& c) {
            gq3_mat3 out;
            check(f(c.ctx, &*c.params, &out), c.ctx);
            return tagged("mat3", mat3_json(out));
          }};
}

const std::map<std::string, OpSpec>& registry() {
  static const std::map<std::string, OpSpec> ops = [] {
    std::map<std::string, OpSpec> m;
    m["family"] = {{}, true, false, false, false, [](Call& c) {
                     return tagged("params", Json::array({c.params->l1,
                                                          c.params->l2,
                                                          c.params->l3}));
                   }};
    m["add"] = quat_binary(gq3_add);
    m["sub"] = quat_binary(gq3_sub);
    m["mul"] = quat_binary(gq3_mul);
    m["scale"] = {{Kind::Scalar, Kind::Quat}, true, false, false, false,
                  [](Call& c) {
                    const double s = c.scalar(0);
                    const auto p = c.quat(1);
                    gq3_quat out;
                    check(gq3_scale(c.ctx, s, &p, &out), c.ctx);
                    return tagged("quat", quat_json(out));
                  }};
    m["conj"] = quat_unary(gq3_conj);
    m["inverse"] = quat_unary(gq3_inverse);
    m["norm"] = {{Kind::Quat}, true, false, false, false, [](Call& c) {
                   const auto p = c.quat(0);
                   double out;
                   check(gq3_norm(c.ctx, &p, &out), c.ctx);
                   return tagged("scalar", out);
                 }};
    m["scalar_product"] = {{Kind::Quat, Kind::Quat}, true, false, false, false,
                           [](Call& c) {
                             const auto p = c.quat(0), q = c.quat(1);
                             double out;
                             check(gq3_scalar_product(c.ctx, &p, &q, &out), c.ctx);
                             return tagged("scalar", out);
                           }};
    m["bilinear_f"] = {{Kind::Vec, Kind::Vec}, true, false, false, false,
                       [](Call& c) {
                         const auto u = c.vec(0), v = c.vec(1);
                         double out;
                         check(gq3_bilinear_f(c.ctx, &u, &v, &out), c.ctx);
                         return tagged("scalar", out);
                       }};
    m["wedge"] = vec_binary(gq3_wedge);
    m["wedge_triple_left"] = vec_ternary(gq3_wedge_triple_left);
    m["wedge_triple_right"] = vec_ternary(gq3_wedge_triple_right);

    m["left_matrix"] = quat_to_mat4(gq3_left_matrix);
    m["right_matrix"] = quat_to_mat4(gq3_right_matrix);
    m["base_matrices"] = {{}, true, false, false, false, [](Call& c) {
                            gq3_mat4 out[4];
                            check(gq3_base_matrices(c.ctx, &*c.params, out), c.ctx);
                            Json list = Json::array();
                            for (const auto& e : out) list.push_back(mat4_json(e));
                            return tagged("mat4_list", list);
                          }};
    m["det4"] = {{Kind::Mat4}, false, false, false, false, [](Call& c) {
                   const auto mat = c.mat4(0);
                   double out;
                   check(gq3_det4(c.ctx, &mat, &out), c.ctx);
                   return tagged("scalar", out);
                 }};
    m["char_poly"] = {{Kind::Quat}, true, false, false, false, [](Call& c) {
                        const auto p = c.quat(0);
                        double out[5];
                        check(gq3_char_poly(c.ctx, &p, out), c.ctx);
                        return tagged("poly", Json::array({out[0], out[1], out[2],
                                                           out[3], out[4]}));
                      }};
    m["eigenvalues"] = {{Kind::Quat}, true, false, false, false, [](Call& c) {
                          const auto p = c.quat(0);
                          gq3_eigenpair out[2];
                          check(gq3_eigenvalues(c.ctx, &p, out), c.ctx);
                          return tagged("complex_pair",
                                        Json::array({complex_json(out[0].value),
                                                     complex_json(out[1].value)}));
                        }};
    m["eigenvectors"] = {{Kind::Quat}, true, false, false, false, [](Call& c) {
                           const auto p = c.quat(0);
                           gq3_eigenpair out[4];
                           check(gq3_eigenvectors(c.ctx, &p, out), c.ctx);
                           Json list = Json::array();
                           for (const auto& e : out) {
                             Json vector = Json::array();
                             for (const auto& z : e.vector) vector.push_back(complex_json(z));
                             list.push_back({{"value", complex_json(e.value)},
                                             {"vector", vector}});
                           }
                           return tagged("eigenpairs", list);
                         }};

    m["to_polar"] = {{Kind::Quat}, true, false, false, false, [](Call& c) {
                       const auto p = c.quat(0);
                       gq3_polar out;
                       check(gq3_to_polar(c.ctx, &p, &out), c.ctx);
                       Json polar = {{"modulus", out.modulus}, {"theta", out.theta}};
                       polar["axis"] = out.has_axis ? vec_json(out.axis) : Json(nullptr);
                       return tagged("polar", polar);
                     }};
    m["demoivre_pow"] = {{Kind::Quat}, true, true, false, false, [](Call& c) {
                           const auto p = c.quat(0);
                           gq3_quat out;
                           check(gq3_demoivre_pow(c.ctx, &p, c.n(), &out), c.ctx);
                           return tagged("quat", quat_json(out));
                         }};
    m["matrix_pow"] = {{Kind::Quat}, true, true, false, false, [](Call& c) {
                         const auto p = c.quat(0);
                         gq3_mat4 out;
                         check(gq3_matrix_pow(c.ctx, &p, c.n(), &out), c.ctx);
                         return tagged("mat4", mat4_json(out));
                       }};
    m["euler_exp"] = {{Kind::Vec}, true, false, false, true, [](Call& c) {
                        const auto v = c.vec(0);
                        gq3_quat out;
                        check(gq3_euler_exp(c.ctx, &v, c.theta(), &out), c.ctx);
                        return tagged("quat", quat_json(out));
                      }};
    m["euler_exp_matrix"] = {{Kind::Vec}, true, false, false, true, [](Call& c) {
                               const auto v = c.vec(0);
                               gq3_mat4 out;
                               check(gq3_euler_exp_matrix(c.ctx, &v, c.theta(), &out),
                                     c.ctx);
                               return tagged("mat4", mat4_json(out));
                             }};
    m["matrix_roots"] = {{Kind::Quat}, true, true, false, false, [](Call& c) {
                           const auto p = c.quat(0);
                           gq3_root_set* raw = nullptr;
                           check(gq3_matrix_roots(c.ctx, &p, c.n(), &raw), c.ctx);
                           std::unique_ptr<gq3_root_set, decltype(&gq3_root_set_destroy)>
                               set(raw, gq3_root_set_destroy);
                           Json list = Json::array();
                           for (std::size_t k = 0; k < gq3_root_set_count(raw); ++k) {
                             gq3_mat4 root;
                             check(gq3_root_set_get(raw, k, &root), c.ctx);
                             list.push_back(mat4_json(root));
                           }
                           return tagged("roots", list);
                         }};
    m["power_period"] = {{Kind::Quat}, true, false, false, false, [](Call& c) {
                           const auto p = c.quat(0);
                           int has = 0, period = 0;
                           check(gq3_power_period(c.ctx, &p, &has, &period), c.ctx);
                           return tagged("period", has ? Json(period) : Json(nullptr));
                         }};
    m["scaled_power_relation"] = {
        {Kind::Quat}, true, true, true, false, [](Call& c) {
          const auto p = c.quat(0);
          gq3_power_relation out;
          check(gq3_scaled_power_relation(c.ctx, &p, c.n(), c.s(), &out), c.ctx);
          return tagged("power_relation", {{"scaled", quat_json(out.scaled)},
                                           {"direct", quat_json(out.direct)},
                                           {"period", out.period}});
        }};

    m["bracket"] = vec_binary(gq3_bracket);
    m["metric_eps"] = params_to_mat3(gq3_metric_eps);
    m["adjoint_group"] = {{Kind::Quat}, true, false, false, false, [](Call& c) {
                            const auto p = c.quat(0);
                            gq3_mat3 out;
                            check(gq3_adjoint_group(c.ctx, &p, &out), c.ctx);
                            return tagged("mat3", mat3_json(out));
                          }};
    m["skew_of_axis"] = vec_to_mat3(gq3_skew_of_axis);
    m["adjoint_rodrigues"] = {{Kind::Vec}, true, false, false, true, [](Call& c) {
                                const auto v = c.vec(0);
                                gq3_mat3 out;
                                check(gq3_adjoint_rodrigues(c.ctx, &v, c.theta(), &out),
                                      c.ctx);
                                return tagged("mat3", mat3_json(out));
                              }};
    m["ad_matrix"] = vec_to_mat3(gq3_ad_matrix);
    m["killing_form"] = {{Kind::Vec, Kind::Vec}, true, false, false, false,
                         [](Call& c) {
                           const auto x = c.vec(0), y = c.vec(1);
                           double out;
                           check(gq3_killing_form(c.ctx, &x, &y, &out), c.ctx);
                           return tagged("scalar", out);
                         }};
    m["killing_matrix"] = params_to_mat3(gq3_killing_matrix);
    m["is_compact"] = {{}, true, false, false, false, [](Call& c) {
                         int out = 0;
                         check(gq3_is_compact(c.ctx, &*c.params, &out), c.ctx);
                         return tagged("boolean", out != 0);
                       }};

    m["pow"] = m["demoivre_pow"];
    m["period"] = m["power_period"];
    m["polar"] = m["to_polar"];
    return m;
  }();
  return ops;
}

Json error_body(const std::string& code, const std::string& message) {
  return {{"status", "error"}, {"code", code}, {"message", message}};
}

Response handle_or_throw(const Request& request) {
  const auto& ops = registry();
  const auto it = ops.find(request.op);
  if (it == ops.end()) throw UsageError("unknown operation '" + request.op + "'");
  const OpSpec& spec = it->second;

  if (request.operands.size() != spec.operands.size())
    throw UsageError(request.op + " takes " + std::to_string(spec.operands.size()) +
                     " operand(s), got " + std::to_string(request.operands.size()));
  if (spec.needs_n && !request.n) throw UsageError(request.op + " needs --n");
  if (spec.needs_s && !request.s) throw UsageError(request.op + " needs --s");
  if (spec.needs_theta && !request.theta)
    throw UsageError(request.op + " needs --theta");
  if (request.params && request.family)
    throw UsageError("--params and --family are mutually exclusive");

  ContextPtr ctx(gq3_context_create(), gq3_context_destroy);
  if (!ctx) throw std::runtime_error("out of memory");
  if (request.tol || request.period_tol) {
    if (gq3_context_set_tolerance(ctx.get(), request.tol.value_or(1e-10),
                                  request.period_tol.value_or(1e-9)) != GQ3_OK)
      throw UsageError(gq3_last_error(ctx.get()));
  }

  Call call{ctx.get(), std::nullopt, request, request.operands};
  if (request.params) {
    call.params = params_from_text(ctx.get(), *request.params);
  } else if (request.family) {
    gq3_params p;
    if (gq3_family(ctx.get(), request.family->c_str(), &p) != GQ3_OK)
      throw UsageError(gq3_last_error(ctx.get()));
    call.params = p;
  } else if (spec.needs_params) {
    throw UsageError(request.op + " needs --params or --family");
  }
  // Parse every operand before dispatch so malformed literals are usage errors
  // rather than surfacing midway through an operation.
  for (std::size_t i = 0; i < spec.operands.size(); ++i) {
    switch (spec.operands[i]) {
      case Kind::Quat: call.quat(i); break;
      case Kind::Vec: call.vec(i); break;
      case Kind::Scalar: call.scalar(i); break;
      case Kind::Mat4: call.mat4(i); break;
    }
  }

  Json result;
  try {
    result = spec.body(call);
  } catch (const DomainError& e) {
    return {error_body(e.code, e.what()), kDomainError};
  }
  return {Json{{"status", "ok"}, {"result", result}}, kOk};
}

std::string format_double(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void emit_string(const std::string& s, std::string& out) {
  // nlohmann's dump already escapes correctly.
  out += Json(s).dump();
}

void emit_into(const Json& v, std::string& out) {
  switch (v.type()) {
    case Json::value_t::null: out += "null"; break;
    case Json::value_t::boolean: out += v.get<bool>() ? "true" : "false"; break;
    case Json::value_t::number_integer: out += std::to_string(v.get<std::int64_t>()); break;
    case Json::value_t::number_unsigned: out += std::to_string(v.get<std::uint64_t>()); break;
    case Json::value_t::number_float: out += format_double(v.get<double>()); break;
    case Json::value_t::string: emit_string(v.get<std::string>(), out); break;
    case Json::value_t::array: {
      out += '[';
      bool first = true;
      for (const auto& e : v) {
        if (!first) out += ',';
        first = false;
        emit_into(e, out);
      }
      out += ']';
      break;
    }
    case Json::value_t::object: {
      out += '{';
      bool first = true;
      for (const auto& [key, e] : v.items()) {
        if (!first) out += ',';
        first = false;
        emit_string(key, out);
        out += ':';
        emit_into(e, out);
      }
      out += '}';
      break;
    }
    default: out += "null"; break;
  }
}

std::string operand_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number()) return format_double(j.get<double>());
  if (j.is_array()) {
    std::string s;
    for (const auto& e : j) {
      if (!e.is_number()) throw std::invalid_argument("operand arrays hold numbers");
      if (!s.empty()) s += ',';
      s += format_double(e.get<double>());
    }
    return s;
  }
  throw std::invalid_argument("operands are strings, numbers or number arrays");
}

int batch(const std::string& path, std::ostream& out, std::ostream& err) {
  std::ifstream in(path);
  if (!in) {
    err << "gq3: cannot read '" << path << "'\n";
    out << emit(error_body("UsageError", "cannot read '" + path + "'")) << '\n';
    return kUsageError;
  }
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    Response r;
    try {
      r = handle(request_from_json(Json::parse(line)));
    } catch (const std::exception& e) {
      r = {error_body("UsageError", e.what()), kUsageError};
    }
    if (r.exit != kOk) err << "gq3: line " << number << ": " << r.body.value("message", "") << '\n';
    out << emit(r.body) << '\n';
  }
  return kOk;
}

}  // namespace

const std::vector<std::string>& operation_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, spec] : registry()) v.push_back(name);
    return v;
  }();
  return names;
}

Response handle(const Request& request) {
  try {
    return handle_or_throw(request);
  } catch (const UsageError& e) {
    return {error_body("UsageError", e.what()), kUsageError};
  } catch (const std::exception& e) {
    return {error_body("Internal", e.what()), kDomainError};
  }
}

Request request_from_json(const Json& line) {
  if (!line.is_object()) throw std::invalid_argument("request must be an object");
  Request r;
  if (!line.contains("op") || !line["op"].is_string())
    throw std::invalid_argument("request needs a string 'op'");
  r.op = line["op"].get<std::string>();
  if (line.contains("params")) r.params = operand_text(line["params"]);
  if (line.contains("family")) {
    if (!line["family"].is_string()) throw std::invalid_argument("'family' must be a string");
    r.family = line["family"].get<std::string>();
  }
  if (line.contains("operands")) {
    if (!line["operands"].is_array()) throw std::invalid_argument("'operands' must be an array");
    for (const auto& o : line["operands"]) r.operands.push_back(operand_text(o));
  }
  if (line.contains("options")) {
    const Json& o = line["options"];
    if (!o.is_object()) throw std::invalid_argument("'options' must be an object");
    auto integer = [&](const char* key) -> std::optional<int> {
      if (!o.contains(key)) return std::nullopt;
      if (!o[key].is_number_integer())
        throw std::invalid_argument(std::string("option '") + key + "' must be an integer");
      return o[key].get<int>();
    };
    auto real = [&](const char* key) -> std::optional<double> {
      if (!o.contains(key)) return std::nullopt;
      if (!o[key].is_number())
        throw std::invalid_argument(std::string("option '") + key + "' must be a number");
      return o[key].get<double>();
    };
    r.n = integer("n");
    r.s = integer("s");
    r.theta = real("theta");
    r.tol = real("tol");
    r.period_tol = real("period_tol");
  }
  return r;
}

std::string emit(const Json& value) {
  std::string out;
  emit_into(value, out);
  return out;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized quaternion calculator. Prints one JSON response."};
  app.set_version_flag("--version", "gq3 1.0.0");

  Request request;
  std::vector<std::string> positional;
  std::string params, family;
  int n = 0, s = 0;
  double theta = 0, tol = 0, period_tol = 0;

  app.add_option("--params", params, "Parameter triple l1,l2,l3");
  app.add_option("--family", family,
                 "hamilton, split, semi, split-semi, quarter or 2param:<lambda>,<mu>");
  auto* n_opt = app.add_option("--n", n, "Exponent or root degree");
  auto* s_opt = app.add_option("--s", s, "Reference exponent for scaled_power_relation");
  auto* theta_opt = app.add_option("--theta", theta, "Angle in radians");
  auto* tol_opt = app.add_option("--tol", tol, "Unit-norm tolerance");
  auto* ptol_opt = app.add_option("--period-tol", period_tol, "Relative period tolerance");
  app.add_option("args", positional,
                 "Operation followed by its operands, or 'batch <file>'")
      ->required();
  app.footer("Operations: " + [] {
    std::string list;
    for (const auto& name : operation_names()) list += name + " ";
    return list + "batch";
  }());

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "gq3: " << e.what() << '\n';
    out << emit(error_body("UsageError", e.what())) << '\n';
    return kUsageError;
  }

  if (positional.front() == "batch") {
    if (positional.size() != 2) {
      err << "gq3: batch takes exactly one file\n";
      out << emit(error_body("UsageError", "batch takes exactly one file")) << '\n';
      return kUsageError;
    }
    return batch(positional[1], out, err);
  }

  request.op = positional.front();
  request.operands.assign(positional.begin() + 1, positional.end());
  if (!params.empty()) request.params = params;
  if (!family.empty()) request.family = family;
  if (*n_opt) request.n = n;
  if (*s_opt) request.s = s;
  if (*theta_opt) request.theta = theta;
  if (*tol_opt) request.tol = tol;
  if (*ptol_opt) request.period_tol = period_tol;

  const Response r = handle(request);
  if (r.exit != kOk) err << "gq3: " << r.body.value("message", "") << '\n';
  out << emit(r.body) << '\n';
  return r.exit;
}

}  // namespace gq3cli
