#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "solv/error.hpp"
#include "solv/geom.hpp"
#include "solv/json_io.hpp"
#include "solv/models.hpp"

namespace {

constexpr const char* kVersion = "1.0.0";

using solv::Json;

std::string fnv1a_hex(const std::string& s) {
  unsigned long long h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

/// Accepts inline JSON or a file path.
std::pair<Json, std::string> read_input(const std::string& arg) {
  std::string text = arg;
  if (!arg.empty() && arg[0] != '{' && arg[0] != '[') {
    std::ifstream in(arg);
    if (!in) throw solv::InvalidInput("cannot open input file: " + arg);
    std::ostringstream os;
    os << in.rdbuf();
    text = os.str();
  }
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw solv::InvalidInput("malformed JSON input");
  return {j, text};
}

solv::ExteriorForm form_from_json(const Json& j) {
  // [[ [i, j, ...], "coeff" ], ...] with 1-based covector indices
  if (!j.is_array() || j.empty()) throw solv::InvalidInput("expected a term list");
  solv::ExteriorForm f;
  bool first = true;
  for (const Json& t : j) {
    if (!t.is_array() || t.size() != 2 || !t[0].is_array())
      throw solv::InvalidInput("each term must be [[indices], coeff]");
    std::vector<int> idx;
    for (const Json& i : t[0]) idx.push_back(i.get<int>() - 1);
    solv::Rat c = solv::rat_from_json(t[1]);
    solv::ExteriorForm term = solv::ExteriorForm::monomial(idx, c);
    f = first ? term : f + term;
    first = false;
  }
  return f;
}

solv::LieAlgebra algebra_from_spec(const std::string& spec, std::string* digest_src) {
  if (!spec.empty() && (spec[0] == '{' || spec.find('.') != std::string::npos)) {
    auto [j, text] = read_input(spec);
    *digest_src += text;
    return solv::liealg_from_json(j);
  }
  *digest_src += spec;
  return solv::catalog(solv::catalog_id_from_string(spec)).algebra;
}

struct Options {
  bool strict = false;
  bool timing = false;
  std::string output;
};

int emit(const Options& opt, const std::string& command, const std::string& digest_src,
         const Json& result, int exit_code, std::chrono::steady_clock::time_point t0) {
  Json report;
  report["command"] = command;
  report["version"] = kVersion;
  report["input_digest"] = fnv1a_hex(digest_src);
  report["result"] = result;
  if (opt.timing) {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    report["elapsed_ms"] = static_cast<long>(ms);
  }
  std::string text = report.dump(2) + "\n";
  if (opt.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(opt.output);
    if (!out) throw solv::InvalidInput("cannot open output file: " + opt.output);
    out << text;
  }
  return exit_code;
}

Json integrability_json(const solv::CatalogEntry& e) {
  Json j;
  if (!e.j) {
    j["has_j"] = false;
    return j;
  }
  j["has_j"] = true;
  auto [ok, wit] = solv::is_integrable<solv::Rat>(e.algebra, *e.j);
  j["integrable"] = ok;
  if (wit)
    j["witness_pair"] = Json::array({wit->first + 1, wit->second + 1});
  return j;
}

Json catalog_verify_payload() {
  Json entries = Json::array();
  for (const solv::CatalogId& id : solv::catalog_all_ids()) {
    solv::CatalogEntry e = solv::catalog(id);
    Json row;
    row["id"] = solv::catalog_id_to_string(id);
    row["name"] = e.name;
    row["jacobi"] = e.algebra.jacobi_ok();
    row["unimodular"] = solv::is_unimodular(e.algebra);
    row["solvable"] = solv::is_solvable(e.algebra);
    row["nilpotent"] = solv::is_nilpotent(e.algebra);
    row["integrability"] = integrability_json(e);
    Json betti = Json::array();
    for (int b : solv::betti_numbers(e.algebra)) betti.push_back(b);
    row["betti"] = betti;
    entries.push_back(row);
  }
  // record for both stated J variants on the Inoue S+- entry, symbolic in q
  Json disc;
  {
    auto [g_stated, j_stated] = solv::catalog_inoue_spm_symbolic(false);
    auto [ok_p, wit_p] = solv::is_integrable<solv::MPoly>(g_stated, j_stated);
    auto [g_swapped, j_swapped] = solv::catalog_inoue_spm_symbolic(true);
    auto [ok_f, wit_f] = solv::is_integrable<solv::MPoly>(g_swapped, j_swapped);
    disc["stated_j_integrable"] = ok_p;
    if (wit_p)
      disc["stated_j_witness_pair"] = Json::array({wit_p->first + 1, wit_p->second + 1});
    disc["swapped_j_integrable"] = ok_f;
    if (wit_f)
      disc["swapped_j_witness_pair"] = Json::array({wit_f->first + 1, wit_f->second + 1});
    disc["note"] =
        "exact symbolic expansion in q: the Nijenhuis tensor vanishes "
        "identically for the stated J and for the variant with X2 and X3 "
        "swapped inside J";
  }
  Json out;
  out["entries"] = entries;
  out["inoue_spm_j_variants"] = disc;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classification and verification toolkit for compact solvmanifolds "
               "of dimension four"};
  app.require_subcommand(1);
  app.fallthrough();  // accept the global flags after a subcommand name too
  Options opt;
  app.add_flag("--strict", opt.strict,
               "exit 3 when the result is only an unenumerated/undetermined class");
  app.add_flag("--timing", opt.timing, "include elapsed_ms in the report");
  app.add_option("-o,--output", opt.output, "write the report to a file");

  std::string arg_type_ii, arg_type_iii;
  auto* c_classify = app.add_subcommand("classify", "classify a mapping-torus input");
  auto* o_ii = c_classify->add_option("--type-ii", arg_type_ii,
                                      "3x3 integer monodromy (JSON or file)");
  auto* o_iii = c_classify->add_option(
      "--type-iii", arg_type_iii, "{\"n\", \"B\", \"eps\"} induced action (JSON or file)");
  o_ii->excludes(o_iii);

  auto* c_catalog = app.add_subcommand("catalog-verify",
                                       "verify the structure-constant catalog");

  std::string arg_algebra;
  auto* c_cohom = app.add_subcommand("cohomology", "invariant cohomology report");
  c_cohom->add_option("--algebra", arg_algebra, "catalog id or algebra file")
      ->required();

  std::string arg_lef_algebra, arg_omega;
  auto* c_lef = app.add_subcommand("lefschetz", "hard Lefschetz check for a 2-form");
  c_lef->add_option("--algebra", arg_lef_algebra, "catalog id or algebra file")
      ->required();
  c_lef->add_option("--omega", arg_omega, "2-form term list (JSON or file)")
      ->required();

  int arg_scan = 0;
  auto* c_lat = app.add_subcommand("lattices", "lattice class enumerations");
  auto* c_lat_h = c_lat->add_subcommand("hyperelliptic",
                                        "the seven finite-order offset classes");
  c_lat_h->add_option("--scan", arg_scan,
                      "also scan offsets with denominators up to this bound");

  auto* c_inoue = app.add_subcommand("inoue", "explicit Inoue-type realizations");
  std::string arg_s0;
  auto* c_s0 = c_inoue->add_subcommand("s0", "affine generator system from a monodromy");
  c_s0->add_option("input", arg_s0, "3x3 integer matrix (JSON or file)")->required();
  std::string arg_spm;
  auto* c_spm = c_inoue->add_subcommand(
      "spm", "lattice constants for the S+/S- construction");
  c_spm->add_option("input", arg_spm,
                    "{\"n\", \"B\", \"eps\", \"gamma\"} (JSON or file)")
      ->required();

  auto* c_table = app.add_subcommand("table",
                                     "complex surfaces of homogeneous type");

  std::string arg_orb;
  auto* c_orb = app.add_subcommand("orbifold", "orbifold Euler number trichotomy");
  c_orb->add_option("input", arg_orb,
                    "{\"euler_base\": e, \"m\": [m1, ...]} (JSON or file)")
      ->required();

  auto t0 = std::chrono::steady_clock::now();
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    Json err;
    err["error"] = "usage";
    err["detail"] = e.what();
    std::cout << err.dump(2) << "\n";
    return 2;
  }

  try {
    if (c_classify->parsed()) {
      if (arg_type_ii.empty() && arg_type_iii.empty())
        throw solv::InvalidInput("classify needs --type-ii or --type-iii");
      solv::ClassificationReport rep;
      std::string digest_src;
      if (!arg_type_ii.empty()) {
        auto [j, text] = read_input(arg_type_ii);
        digest_src = text;
        const Json& m = j.is_object() && j.contains("matrix") ? j.at("matrix") : j;
        rep = solv::classify_type_II(solv::int_mat_from_json(m, 3, 3));
      } else {
        auto [j, text] = read_input(arg_type_iii);
        digest_src = text;
        rep = solv::classify_type_III(j.at("n").get<int>(),
                                      solv::int_mat_from_json(j.at("B"), 2, 2),
                                      j.at("eps").get<int>());
      }
      int code = 0;
      if (opt.strict && rep.cls.tag == solv::SurfaceTag::OtherNotEnumerated) code = 3;
      return emit(opt, "classify", digest_src, solv::classification_to_json(rep),
                  code, t0);
    }

    if (c_catalog->parsed())
      return emit(opt, "catalog-verify", "", catalog_verify_payload(), 0, t0);

    if (c_cohom->parsed()) {
      std::string digest_src;
      solv::LieAlgebra g = algebra_from_spec(arg_algebra, &digest_src);
      solv::CEComplex ce = solv::ce_differential(g);  // validates d.d = 0
      std::vector<int> betti = solv::betti_numbers(g);
      Json out;
      Json bj = Json::array();
      int chi = 0, sign = 1;
      bool duality = true;
      for (std::size_t k = 0; k < betti.size(); ++k) {
        bj.push_back(betti[k]);
        chi += sign * betti[k];
        sign = -sign;
        if (betti[k] != betti[betti.size() - 1 - k]) duality = false;
      }
      out["dim"] = g.dim;
      out["betti"] = bj;
      out["euler_characteristic"] = chi;
      out["poincare_duality"] = duality;
      out["de_rham_valid"] = true;
      (void)ce;
      return emit(opt, "cohomology", digest_src, out, 0, t0);
    }

    if (c_lef->parsed()) {
      std::string digest_src;
      solv::LieAlgebra g = algebra_from_spec(arg_lef_algebra, &digest_src);
      auto [oj, otext] = read_input(arg_omega);
      digest_src += otext;
      solv::ExteriorForm omega = form_from_json(oj);
      Json out;
      out["symplectic"] = solv::is_symplectic(g, omega);
      if (out["symplectic"].get<bool>()) {
        Json lef = Json::array();
        for (bool b : solv::hard_lefschetz(g, omega)) lef.push_back(b);
        out["hard_lefschetz"] = lef;
      }
      out["betti_parity"] = solv::betti_parity_check(g);
      return emit(opt, "lefschetz", digest_src, out, 0, t0);
    }

    if (c_lat->parsed()) {
      if (!c_lat_h->parsed())
        throw solv::InvalidInput("expected: lattices hyperelliptic");
      Json out;
      Json classes = Json::array();
      for (const auto& c : solv::hyperelliptic_lattices()) {
        Json row = solv::lattice_class_to_json(c);
        row["verified"] = solv::verify_hyperelliptic_lattice(c);
        classes.push_back(row);
      }
      out["classes"] = classes;
      if (arg_scan > 0) {
        Json found = Json::array();
        for (const auto& c : solv::hyperelliptic_lattice_scan(arg_scan))
          found.push_back(solv::lattice_class_to_json(c));
        out["scan_max_den"] = arg_scan;
        out["scan_classes"] = found;
      }
      return emit(opt, "lattices hyperelliptic", std::to_string(arg_scan), out, 0, t0);
    }

    if (c_inoue->parsed()) {
      if (c_s0->parsed()) {
        auto [j, text] = read_input(arg_s0);
        const Json& m = j.is_object() && j.contains("matrix") ? j.at("matrix") : j;
        solv::InoueS0Report rep =
            solv::inoue_s0_generators(solv::int_mat_from_json(m, 3, 3));
        return emit(opt, "inoue s0", text, solv::inoue_s0_to_json(rep), 0, t0);
      }
      if (c_spm->parsed()) {
        auto [j, text] = read_input(arg_spm);
        std::pair<solv::Rat, solv::Rat> gamma{0, 0};
        if (j.contains("gamma")) {
          const Json& gj = j.at("gamma");
          if (!gj.is_array() || gj.size() != 2)
            throw solv::InvalidInput("gamma must be [p, q]");
          gamma = {solv::rat_from_json(gj[0]), solv::rat_from_json(gj[1])};
        }
        solv::SpmSolution s = solv::inoue_spm_solve(
            j.at("n").get<int>(), solv::int_mat_from_json(j.at("B"), 2, 2),
            j.at("eps").get<int>(), gamma);
        return emit(opt, "inoue spm", text, solv::spm_solution_to_json(s), 0, t0);
      }
      throw solv::InvalidInput("expected: inoue s0|spm");
    }

    if (c_table->parsed()) {
      Json rows = Json::array();
      for (const auto& r : solv::homogeneous_surface_table()) {
        Json row;
        row["model"] = r.model;
        row["b1"] = r.b1;
        row["surface"] = r.surface;
        row["kodaira_dimension"] = r.kodaira;
        rows.push_back(row);
      }
      return emit(opt, "table", "", rows, 0, t0);
    }

    if (c_orb->parsed()) {
      auto [j, text] = read_input(arg_orb);
      solv::OrbifoldInput inp;
      inp.euler_base = j.at("euler_base").get<int>();
      if (j.contains("m"))
        for (const Json& m : j.at("m")) inp.multiplicities.push_back(m.get<int>());
      auto [value, type] = solv::orbifold_euler(inp);
      Json out;
      out["value"] = solv::rat_to_json(value);
      out["type"] = type == solv::OrbifoldType::Hyperbolic ? "hyperbolic"
                    : type == solv::OrbifoldType::Flat     ? "flat"
                                                           : "spherical";
      return emit(opt, "orbifold", text, out, 0, t0);
    }
  } catch (const solv::Error& e) {
    Json err;
    err["error"] = e.code();
    err["detail"] = e.what();
    std::cout << err.dump(2) << "\n";
    return 2;
  } catch (const Json::exception& e) {
    Json err;
    err["error"] = "invalid_input";
    err["detail"] = e.what();
    std::cout << err.dump(2) << "\n";
    return 2;
  }
  return 0;
}
