// kmfeas: randomized projection solvers for linear feasibility (Ax <= b).
// SPDX-License-Identifier: MIT

#include "kmfeas/csv.hpp"

#include <charconv>
#include <sstream>

namespace kmfeas {

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

namespace {

void append_optional(std::string& out, const std::optional<double>& v) {
  out.push_back(',');
  if (v.has_value()) out += format_double(*v);
}

}  // namespace

std::string trace_to_csv(const Trace& trace, const TraceConfig& cfg) {
  std::string out = "# kmfeas-trace v1\n";
  out += "k,residual_norm,fsc";
  if (cfg.record_f) out += ",f";
  if (cfg.record_dist) out += ",dist";
  if (cfg.record_cesaro_f) out += ",cesaro_f";
  out.push_back('\n');
  for (const TraceRecord& rec : trace.records) {
    out += std::to_string(rec.k);
    out.push_back(',');
    out += format_double(rec.residual_norm);
    out.push_back(',');
    out += format_double(rec.fsc);
    if (cfg.record_f) append_optional(out, rec.f);
    if (cfg.record_dist) append_optional(out, rec.dist);
    if (cfg.record_cesaro_f) append_optional(out, rec.cesaro_f);
    out.push_back('\n');
  }
  return out;
}

std::string sweep_to_csv(const std::vector<ResultRow>& rows) {
  std::string out = "# kmfeas-sweep v1\n";
  out +=
      "run_id,trial,method,beta,delta,gamma,k,cpu_seconds,residual_norm,fsc,"
      "dist_to_P,f_value,status\n";
  for (const ResultRow& r : rows) {
    out += std::to_string(r.run_id);
    out.push_back(',');
    out += std::to_string(r.trial);
    out.push_back(',');
    out += method_name(r.method);
    out.push_back(',');
    out += std::to_string(r.beta);
    out.push_back(',');
    out += format_double(r.delta);
    out.push_back(',');
    out += format_double(r.gamma);
    out.push_back(',');
    out += std::to_string(r.k);
    append_optional(out, r.cpu_seconds);
    out.push_back(',');
    out += format_double(r.residual_norm);
    out.push_back(',');
    out += format_double(r.fsc);
    append_optional(out, r.dist_to_p);
    append_optional(out, r.f_value);
    out.push_back(',');
    out += r.status;
    out.push_back('\n');
  }
  return out;
}

}  // namespace kmfeas
