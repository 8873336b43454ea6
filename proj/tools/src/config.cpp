// Copyright 2026 The gri Authors
// SPDX-License-Identifier: Apache-2.0
#include "gri_cli/config.hpp"

#include <map>

#include "gri/error.hpp"
#include "gri_cli/csv.hpp"

namespace gri::cli {
namespace {

double need_line(const RunConfig& c, const std::string& name) {
  if (!c.poverty_line) throw UsageError("--index " + name + " needs --poverty-line");
  return *c.poverty_line;
}

}  // namespace

NamedIndex make_index(const RunConfig& c) {
  const std::string name = c.index.value_or("fgt");
  NamedIndex idx;
  try {
  if (name == "fgt") {
    idx = NamedIndex::fgt(need_line(c, name), c.alpha.value_or(0.0));
  } else if (name == "sen") {
    idx = NamedIndex::sen(need_line(c, name));
  } else if (name == "kakwani") {
    idx = NamedIndex::kakwani(need_line(c, name), c.k.value_or(1));
  } else if (name == "shorrocks") {
    idx = NamedIndex::shorrocks(need_line(c, name));
  } else if (name == "thon") {
    idx = NamedIndex::thon(need_line(c, name));
  } else if (name == "takayama") {
    idx = NamedIndex::takayama(need_line(c, name));
  } else if (name == "takayama-ratio") {
    idx = NamedIndex::takayama_ratio(need_line(c, name));
  } else if (name == "central-moment") {
    idx = NamedIndex::central_moment(c.order.value_or(2));
  } else if (name == "odd-moment") {
    idx = NamedIndex::odd_moment(c.order.value_or(2));
  } else if (name == "even-moment") {
    idx = NamedIndex::even_moment(c.order.value_or(2));
  } else {
    throw UsageError("unknown index '" + name + "'");
  }
    idx.validate();
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  return idx;
}

FamilyPtr parse_family(std::string_view text) {
  const auto open = text.find('(');
  if (open == text.npos || text.back() != ')') throw UsageError("family must look like name(p1,p2): " + std::string(text));
  const std::string name(text.substr(0, open));
  std::vector<double> p;
  auto rest = text.substr(open + 1, text.size() - open - 2);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const auto v = parse_number(rest.substr(0, comma));
    if (!v) throw UsageError("bad family parameter in " + std::string(text));
    p.push_back(*v);
    if (comma == rest.npos) break;
    rest.remove_prefix(comma + 1);
  }
  static const std::map<std::string, std::size_t> arity = {
      {"uniform", 2}, {"exponential", 1}, {"lognormal", 2}, {"pareto", 2}, {"normal", 2}};
  const auto it = arity.find(name);
  if (it == arity.end()) throw UsageError("unknown family '" + name + "'");
  if (p.size() != it->second) throw UsageError(name + " takes " + std::to_string(it->second) + " parameter(s)");
  try {
    if (name == "uniform") return ParametricFamily::uniform(p[0], p[1]);
    if (name == "exponential") return ParametricFamily::exponential(p[0]);
    if (name == "lognormal") return ParametricFamily::lognormal(p[0], p[1]);
    if (name == "pareto") return ParametricFamily::pareto(p[0], p[1]);
    return ParametricFamily::normal(p[0], p[1]);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

double resolved_level(const RunConfig& c) {
  const double level = c.level.value_or(0.95);
  if (!(level > 0.0 && level < 1.0)) throw UsageError("--level must be in (0, 1)");
  return level;
}

}  // namespace gri::cli
