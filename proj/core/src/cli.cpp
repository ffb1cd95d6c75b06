#include "eqcell/cli.hpp"

#include "eqcell/chains.hpp"
#include "eqcell/document.hpp"
#include "eqcell/lefschetz.hpp"

#include <json.hpp>

#include <fstream>
#include <limits>
#include <sstream>

namespace eqcell {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json to_json(const Integer& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max()) {
    return static_cast<long long>(v);
  }
  return v.str();
}

ordered_json to_json(const UDVector& v, const OrbitCategory& oc) {
  ordered_json out = ordered_json::object();
  const auto labels = oc.class_labels();
  for (std::size_t i = 0; i < v.size(); ++i) out[labels[i]] = to_json(v[i]);
  return out;
}

class Table {
 public:
  explicit Table(std::vector<std::string> header) : rows_{std::move(header)} {}
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  std::string render() const {
    std::vector<std::size_t> width;
    for (const auto& row : rows_) {
      width.resize(std::max(width.size(), row.size()), 0);
      for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    }
    std::string out;
    for (const auto& row : rows_) {
      std::string line;
      for (std::size_t c = 0; c < row.size(); ++c) {
        line += row[c];
        if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
      }
      out += line + "\n";
    }
    return out;
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string torsion_text(const std::vector<Integer>& torsion) {
  if (torsion.empty()) return "-";
  std::vector<std::string> parts;
  for (const auto& t : torsion) parts.push_back("Z/" + t.str());
  return join(parts, " + ");
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

Document prepared(const CliRequest& request) {
  Document doc = load_document(request.document);
  if (doc.options.subdivide > 0) doc = subdivide_document(doc, doc.options.subdivide);
  return doc;
}

// --- commands ---------------------------------------------------------------

CliResult cmd_validate(const CliRequest& request) {
  std::vector<std::string> passed;
  CliResult result;
  std::string failure;
  std::optional<Document> doc;
  try {
    doc = load_document(request.document, &passed);
  } catch (const ParseError& e) {
    failure = std::string("parse error: ") + e.what();
  } catch (const ValidationError& e) {
    failure = e.what();
  }
  if (request.json) {
    ordered_json j = ordered_json::object();
    j["valid"] = failure.empty();
    j["passed"] = passed;
    if (!failure.empty()) j["error"] = failure;
    result.output = dump(j);
  } else {
    for (const auto& stage : passed) result.output += stage + ": ok\n";
    if (doc && !doc->map) result.output += "map: absent\n";
    result.output += failure.empty() ? "valid\n" : "invalid: " + failure + "\n";
  }
  result.exit_code = failure.empty() ? exit_code::success : exit_code::invalid_input;
  return result;
}

CliResult cmd_euler(const CliRequest& request) {
  const Document doc = prepared(request);
  const UDVector chi = euler_class(*doc.space);
  CliResult result;
  if (request.json) {
    result.output = dump({{"euler", to_json(chi, *doc.orbits)}});
  } else {
    result.output = format_ud(*doc.orbits, chi) + "\n";
  }
  return result;
}

CliResult cmd_homology(const CliRequest& request) {
  const Document doc = prepared(request);
  const std::string kind = request.coefficients.value_or(doc.options.coefficients);
  std::shared_ptr<const CoefficientSystem> m;
  if (kind == "constant") {
    m = std::make_shared<const CoefficientSystem>(CoefficientSystem::constant(doc.orbits));
  } else if (kind == "isotropy") {
    auto ring = std::make_shared<const IsotropyRing>(doc.orbits);
    m = std::make_shared<const CoefficientSystem>(CoefficientSystem::isotropy(ring));
  } else {
    throw ValidationError("coefficients must be 'constant' or 'isotropy', not '" + kind + "'");
  }
  const ChainComplex c = build_chain_complex(doc.space, m);
  const HomologyResult h = homology(c);
  const OrbitCategory& oc = *doc.orbits;

  CliResult result;
  if (request.json) {
    ordered_json degrees = ordered_json::array();
    for (std::size_t n = 0; n < h.degrees.size(); ++n) {
      const auto& d = h.degrees[n];
      ordered_json entry = ordered_json::object();
      entry["degree"] = n;
      entry["chain_rank"] = c.rank(static_cast<int>(n));
      entry["betti"] = d.betti;
      ordered_json torsion = ordered_json::array();
      for (const auto& t : d.torsion) torsion.push_back(to_json(t));
      entry["torsion"] = std::move(torsion);
      if (h.graded_by_domain) {
        ordered_json by_domain = ordered_json::object();
        for (std::size_t s = 0; s < d.betti_by_domain.size(); ++s) {
          by_domain[oc.orbit_name(static_cast<int>(s))] = d.betti_by_domain[s];
        }
        entry["betti_by_domain"] = std::move(by_domain);
      }
      degrees.push_back(std::move(entry));
    }
    result.output = dump({{"coefficients", kind}, {"degrees", std::move(degrees)}});
    return result;
  }

  std::vector<std::string> header{"degree", "chain rank", "betti", "torsion"};
  if (h.graded_by_domain) header.push_back("betti by domain");
  Table table(header);
  for (std::size_t n = 0; n < h.degrees.size(); ++n) {
    const auto& d = h.degrees[n];
    std::vector<std::string> row{std::to_string(n), std::to_string(c.rank(static_cast<int>(n))),
                                 std::to_string(d.betti), torsion_text(d.torsion)};
    if (h.graded_by_domain) {
      std::vector<std::string> parts;
      for (std::size_t s = 0; s < d.betti_by_domain.size(); ++s) {
        parts.push_back(oc.orbit_name(static_cast<int>(s)) + ": " + std::to_string(d.betti_by_domain[s]));
      }
      row.push_back(join(parts, ", "));
    }
    table.add(std::move(row));
  }
  result.output = "coefficients: " + kind + "\n" + table.render();
  return result;
}

CliResult cmd_lefschetz(const CliRequest& request) {
  const Document doc = prepared(request);
  if (!doc.map) throw ValidationError("map: the document has no map section");
  auto ring = std::make_shared<const IsotropyRing>(doc.orbits);
  const TheoremCheck check = theorem_check(*doc.map, ring);
  if (!check.passed) throw InternalError("a certified class has nonzero Lefschetz number");
  const LefschetzReport& report = check.report;
  const Integer ordinary = ordinary_lefschetz(*doc.map);
  const OrbitCategory& oc = *doc.orbits;
  const auto labels = oc.class_labels();

  CliResult result;
  result.exit_code = report.lambda.is_zero() ? exit_code::success : exit_code::nonzero_lefschetz;
  if (request.json) {
    ordered_json classes = ordered_json::array();
    for (std::size_t m = 0; m < labels.size(); ++m) {
      classes.push_back({{"class", labels[m]},
                         {"lambda", to_json(report.lambda[m])},
                         {"invariant_simplices", report.invariant_simplices[m]},
                         {"disjoint_image", static_cast<bool>(report.disjoint_image[m])},
                         {"closed_disjoint", static_cast<bool>(report.closed_disjoint[m])}});
    }
    result.output = dump({{"lambda", to_json(report.lambda, oc)},
                          {"ordinary", to_json(ordinary)},
                          {"classes", std::move(classes)}});
    return result;
  }
  Table table({"class", "lambda", "invariant simplices", "disjoint image", "closed disjoint"});
  for (std::size_t m = 0; m < labels.size(); ++m) {
    const auto& inv = report.invariant_simplices[m];
    table.add({labels[m], report.lambda[m].str(), inv.empty() ? "-" : join(inv, ", "),
               report.disjoint_image[m] ? "yes" : "no", report.closed_disjoint[m] ? "yes" : "no"});
  }
  result.output = "lambda: " + format_ud(oc, report.lambda) + "\nordinary: " + ordinary.str() + "\n" +
                  table.render();
  return result;
}

CliResult cmd_subdivide(const CliRequest& request) {
  const Document doc = load_document(request.document);
  const int times = request.times.value_or(1);
  if (times < 0) throw ValidationError("--times must be non-negative");
  const Document refined = subdivide_document(doc, times);
  const std::string text = write_document(refined);
  CliResult result;
  if (!request.out) {
    result.output = text;
    return result;
  }
  std::ofstream out(*request.out, std::ios::binary);
  if (!out || !(out << text) || !out.flush()) {
    throw ValidationError("cannot write '" + request.out->string() + "'");
  }
  std::vector<std::size_t> counts;
  for (int d = 0; d <= refined.space->dimension(); ++d) counts.push_back(refined.space->simplices(d).size());
  if (request.json) {
    result.output = dump({{"out", request.out->string()}, {"times", times}, {"simplices", counts}});
  } else {
    std::vector<std::string> parts;
    for (auto n : counts) parts.push_back(std::to_string(n));
    result.output = "wrote " + request.out->string() + " (simplices per dimension: " + join(parts, ", ") + ")\n";
  }
  return result;
}

CliResult cell_report(const DeltaComplex& d, const std::string& title, const std::string& key,
                      const std::string& name, bool as_json) {
  const auto counts = d.counts();
  const auto h = delta_homology(d);
  CliResult result;
  if (as_json) {
    ordered_json dims = ordered_json::array();
    for (std::size_t n = 0; n < counts.size(); ++n) {
      ordered_json torsion = ordered_json::array();
      for (const auto& t : h[n].torsion) torsion.push_back(to_json(t));
      dims.push_back({{"dimension", n}, {"cells", counts[n]}, {"betti", h[n].betti}, {"torsion", torsion}});
    }
    result.output = dump({{key, name}, {"dimensions", std::move(dims)}});
    return result;
  }
  Table table({"dimension", "cells", "betti", "torsion"});
  for (std::size_t n = 0; n < counts.size(); ++n) {
    table.add({std::to_string(n), std::to_string(counts[n]), std::to_string(h[n].betti),
               torsion_text(h[n].torsion)});
  }
  result.output = title + " " + name + "\n" + table.render();
  return result;
}

CliResult cmd_orbit_point(const CliRequest& request) {
  if (!request.orbit) throw ValidationError("orbit-point requires --orbit");
  const Document doc = prepared(request);
  auto t = doc.orbits->find_orbit(*request.orbit);
  if (!t) throw ValidationError("unknown orbit '" + *request.orbit + "'");
  return cell_report(orbit_point(*doc.space, *t), "orbit-point", "orbit", *request.orbit, request.json);
}

CliResult cmd_total_space(const CliRequest& request) {
  if (!request.object) throw ValidationError("total-space requires --object");
  const Document doc = prepared(request);
  return cell_report(total_space(*doc.space, *request.object), "total-space", "object", *request.object,
                     request.json);
}

}  // namespace

CliResult run(const CliRequest& request) {
  try {
    if (request.command == "validate") return cmd_validate(request);
    if (request.command == "euler") return cmd_euler(request);
    if (request.command == "homology") return cmd_homology(request);
    if (request.command == "lefschetz") return cmd_lefschetz(request);
    if (request.command == "subdivide") return cmd_subdivide(request);
    if (request.command == "orbit-point") return cmd_orbit_point(request);
    if (request.command == "total-space") return cmd_total_space(request);
    return {exit_code::invalid_input, "", "error: unknown command '" + request.command + "'\n"};
  } catch (const ParseError& e) {
    return {exit_code::invalid_input, "", std::string("parse error: ") + e.what() + "\n"};
  } catch (const ValidationError& e) {
    return {exit_code::invalid_input, "", std::string("invalid: ") + e.what() + "\n"};
  } catch (const InternalError& e) {
    return {exit_code::internal_error, "", std::string("internal error: ") + e.what() + "\n"};
  } catch (const std::exception& e) {
    return {exit_code::internal_error, "", std::string("internal error: ") + e.what() + "\n"};
  }
}

}  // namespace eqcell
