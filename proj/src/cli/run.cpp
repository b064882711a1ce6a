#include "schubcell/cli.hpp"

#include "document.hpp"
#include "schubcell/errors.hpp"
#include "schubcell/matrix_io.hpp"
#include "schubcell/real_schubert.hpp"
#include "schubcell/shelling.hpp"
#include "schubcell/tnn.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace schubcell {

namespace {

using nlohmann::json;

std::string joined(const std::vector<std::string>& words) {
  std::string s;
  for (const auto& w : words) s += (s.empty() ? "" : " ") + w;
  return s;
}

std::string betti_text(const BettiVector& b) {
  const auto t = trimmed(b);
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
  return s + ")";
}

Subspace read_subspace(const RunConfig& config) {
  ParsedMatrix parsed;
  if (config.input == "-") {
    parsed = parse_matrix(std::cin);
  } else {
    std::ifstream in(config.input);
    if (!in) throw InputError("cannot open " + config.input);
    parsed = parse_matrix(in);
  }
  if (parsed.columns > kMaxGroundSize)
    throw GuardrailError("ground set of size " + std::to_string(parsed.columns) + " exceeds the hard limit " +
                         std::to_string(kMaxGroundSize));
  return config.mode == InputMode::Equations ? kernel_basis(parsed.rows, parsed.columns)
                                             : Subspace::span(parsed.columns, parsed.rows);
}

void print_flats(std::ostream& out, const std::vector<Flat>& flats) {
  for (const auto& f : flats) out << set_label(f.members) << " rank " << f.rank << "\n";
}

void print_cells(std::ostream& out, const CellComplexPoset& c) {
  const auto f = c.f_vector();
  out << "cells: " << c.cells.size() << "\n";
  for (std::size_t d = 0; d < f.size(); ++d) out << "dim " << d << ": " << f[d] << "\n";
  for (const auto& cell : c.cells) out << cell.label(c.ground_size) << " dim " << cell.dim << "\n";
}

void print_report(std::ostream& out, const Report& r) {
  std::map<std::string, std::pair<std::size_t, std::size_t>> tally;  // check -> (passed, failed)
  for (const auto& rec : r.records) {
    auto& t = tally[rec.check];
    (rec.pass ? t.first : t.second) += 1;
  }
  for (const auto& [check, t] : tally)
    out << (t.second == 0 ? "PASS " : "FAIL ") << check << " (" << t.first << " passed, " << t.second
        << " failed)\n";
  for (const auto& rec : r.records)
    if (!rec.pass)
      out << "  failed " << rec.check << " on " << rec.subject << (rec.witness.empty() ? "" : ": " + rec.witness)
          << "\n";
}

Report thinness_report(const OrientedMatroid& m) {
  Report r;
  const auto lv = las_vergnas_lattice(m);
  const auto lt = is_thin(lv);
  r.add("las-vergnas-lattice", "lattice-thin",
        lt.thin, lt.witness ? lv.label(lt.witness->first) + ".." + lv.label(lt.witness->second) : "");
  const auto cov = covector_poset(m).with_top("top");
  if (cov.is_graded()) {
    const auto ct = is_thin(cov);
    r.add("covector-poset", "covector-poset-thin", ct.thin,
          ct.witness ? cov.label(ct.witness->first) + ".." + cov.label(ct.witness->second) : "");
  } else {
    r.add("covector-poset", "covector-poset-thin", false, "not graded");
  }
  return r;
}

Report shelling_report(const CellComplexPoset& c) {
  Report r;
  const auto order = find_boundary_shelling(c, true);
  std::string text;
  if (order)
    for (auto i : *order) text += (text.empty() ? "" : " ") + c.cells[i].label(c.ground_size);
  r.add("boundary", "shelling-found", order.has_value(), text);
  if (order) {
    r.add("boundary", "shelling-verified", verify_shelling(c.closure, *order));
    r.add("boundary", "property-s", has_property_s(c.closure, *order));
  }
  return r;
}

Report verify_all(const Subspace& v, const OrientedMatroid& m, const BuildOptions& options) {
  Report r;
  const auto axioms = check_axioms(m.ground_size(), m.covectors());
  r.add("covectors", "covector-axioms", axioms.ok(),
        axioms.ok() ? "" : axioms.violations.front().describe(m.ground_size()));
  r.append(thinness_report(m));
  r.append(verify_strata_oracle(v, options));
  const auto tnn = tnn_cell_poset(m);
  r.append(closure_report(m, tnn));
  r.append(regularity_report(tnn));
  r.append(boundary_pairing_check(tnn));
  r.append(shelling_report(tnn));
  r.append(minor_correspondence_check(v, options));
  r.append(chart_consistency_check(v, options));
  return r;
}

int dispatch(const RunConfig& config, std::ostream& out) {
  const auto& cmd = config.command;
  if (cmd.empty()) throw InputError("no command given");
  const std::string name = cmd[0];
  const std::string arg = cmd.size() > 1 ? cmd[1] : "";
  const bool needs_arg = name == "cells" || name == "homology";
  if (needs_arg && arg != "tnn" && arg != "real") throw InputError(name + " expects 'tnn' or 'real'");
  if (cmd.size() > (needs_arg ? 2u : 1u)) throw InputError("unexpected arguments: " + joined(cmd));

  BuildOptions options;
  if (config.allow_large) options.ground_limit = kMaxGroundSize;
  const Subspace v = read_subspace(config);
  const OrientedMatroid m = from_subspace(v, options);
  const std::size_t n = m.ground_size();
  const bool json_out = config.format == OutputFormat::Json;
  const bool dot_out = config.format == OutputFormat::Dot;

  json doc = cli::matroid_document(m);
  doc["command"] = joined(cmd);

  if (name == "covectors") {
    if (dot_out) {
      out << covector_poset(m).to_dot("covectors");
    } else if (json_out) {
      doc["covectors"] = cli::covectors_json(m);
      out << doc.dump(2) << "\n";
    } else {
      out << "covectors: " << m.covectors().size() << "\n";
      for (auto x : m.covectors()) out << x.str(n) << "\n";
    }
    return kExitOk;
  }
  if (name == "flats" || name == "acyclic-flats") {
    const bool acyclic = name == "acyclic-flats";
    if (dot_out) {
      out << (acyclic ? las_vergnas_lattice(m) : flat_lattice(m)).to_dot(acyclic ? "acyclic_flats" : "flats");
    } else if (json_out) {
      out << doc.dump(2) << "\n";
    } else {
      const auto flats = acyclic ? acyclic_flats(m) : m.flats();
      out << (acyclic ? "acyclic flats: " : "flats: ") << flats.size() << "\n";
      print_flats(out, flats);
    }
    return kExitOk;
  }
  if (name == "cells") {
    const auto c = arg == "tnn" ? tnn_cell_poset(m) : yv_complex(m);
    if (dot_out) {
      out << c.closure.to_dot(arg == "tnn" ? "tnn_cells" : "real_cells");
    } else if (json_out) {
      doc["cells"] = cli::cells_json(c);
      doc["covers"] = cli::covers_json(c.closure);
      out << doc.dump(2) << "\n";
    } else {
      print_cells(out, c);
    }
    return kExitOk;
  }
  if (name == "homology") {
    json numbers;
    if (arg == "tnn") {
      const auto c = tnn_cell_poset(m);
      numbers["complex"] = cli::betti_json(order_complex_betti(c.closure));
      numbers["boundary"] = cli::betti_json(order_complex_betti(c.closure.subposet(c.boundary())));
    } else {
      numbers["complex"] = cli::betti_json(order_complex_betti(yv_complex(m).closure));
    }
    if (json_out) {
      doc["betti"] = {{arg, numbers}};
      out << doc.dump(2) << "\n";
    } else {
      for (const auto& [key, value] : numbers.items()) {
        BettiVector b = value.get<BettiVector>();
        out << arg << " " << key << " betti " << betti_text(b) << "\n";
      }
    }
    return kExitOk;
  }
  if (name == "shelling") {
    const auto c = tnn_cell_poset(m);
    const Report r = shelling_report(c);
    if (json_out) {
      doc["checks"] = cli::report_json(r);
      out << doc.dump(2) << "\n";
    } else {
      const auto& found = r.records.front();
      out << (found.pass ? "shelling: " + found.witness : std::string("no shelling found")) << "\n";
      print_report(out, r);
    }
    return r.all_pass() ? kExitOk : kExitCheckFailed;
  }
  if (name == "verify" || name == "export") {
    const Report r = verify_all(v, m, options);
    const auto lattice = flat_lattice(m);
    const auto thin = is_thin(lattice);
    if (name == "export" && dot_out) {
      out << tnn_cell_poset(m).closure.to_dot("tnn_cells");
      return r.all_pass() ? kExitOk : kExitCheckFailed;
    }
    if (name == "export" || json_out) {
      const auto tnn = tnn_cell_poset(m);
      const auto real = yv_complex(m);
      doc["covectors"] = cli::covectors_json(m);
      doc["flat_lattice_thin"] = thin.thin;
      doc["cells"] = {{"tnn", cli::cells_json(tnn)}, {"real", cli::cells_json(real)}};
      doc["covers"] = {{"tnn", cli::covers_json(tnn.closure)}, {"real", cli::covers_json(real.closure)}};
      doc["betti"] = {{"tnn", {{"complex", cli::betti_json(order_complex_betti(tnn.closure))},
                               {"boundary", cli::betti_json(order_complex_betti(tnn.closure.subposet(tnn.boundary())))}}},
                      {"real", {{"complex", cli::betti_json(order_complex_betti(real.closure))}}}};
      doc["checks"] = cli::report_json(r);
      doc["all_pass"] = r.all_pass();
      out << doc.dump(2) << "\n";
    } else {
      out << "flat lattice thin: " << (thin.thin ? "yes" : "no");
      if (thin.witness)
        out << " (interval " << lattice.label(thin.witness->first) << ".." << lattice.label(thin.witness->second)
            << " has " << thin.witness_size << " elements)";
      out << "\n";
      print_report(out, r);
      out << (r.all_pass() ? "all checks passed" : std::to_string(r.failures()) + " checks failed") << "\n";
    }
    return r.all_pass() ? kExitOk : kExitCheckFailed;
  }
  throw InputError("unknown command: " + name);
}

}  // namespace

std::vector<std::string> command_names() {
  return {"covectors", "flats", "acyclic-flats", "cells tnn", "cells real", "verify",
          "homology tnn", "homology real", "shelling", "export"};
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(config, out);
  } catch (const GuardrailError& e) {
    err << "error: " << e.what() << "; rerun with --allow-large to lift the limit\n";
    return kExitInputError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace schubcell
