#include "solv/json_io.hpp"

#include <sstream>

#include "solv/error.hpp"

namespace solv {

Json rat_to_json(const Rat& r) { return to_string(r); }

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return rat(j.get<long>(), 1);
  if (j.is_string()) return parse_rat(j.get<std::string>());
  throw InvalidInput("expected an integer or a \"p/q\" string");
}

Json int_mat_to_json(const IntMat& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      row.push_back(static_cast<long>(m(i, j).get_si()));
    rows.push_back(row);
  }
  return rows;
}

IntMat int_mat_from_json(const Json& j, int rows, int cols) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows)
    throw InvalidInput("expected a " + std::to_string(rows) + "x" +
                       std::to_string(cols) + " integer matrix");
  IntMat m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    const Json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      throw InvalidInput("matrix row has wrong length");
    for (int k = 0; k < cols; ++k) {
      const Json& e = row[static_cast<std::size_t>(k)];
      if (!e.is_number_integer()) throw InvalidInput("matrix entries must be integers");
      m(i, k) = Int(e.get<long>());
    }
  }
  return m;
}

Json rat_mat_to_json(const RatMat& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(rat_to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

RatMat rat_mat_from_json(const Json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array())
    throw InvalidInput("expected an array of arrays");
  const int rows = static_cast<int>(j.size());
  const int cols = static_cast<int>(j[0].size());
  RatMat m = RatMat::Constant(rows, cols, Rat(0));
  for (int i = 0; i < rows; ++i) {
    const Json& row = j[static_cast<std::size_t>(i)];
    if (static_cast<int>(row.size()) != cols)
      throw InvalidInput("matrix row has wrong length");
    for (int k = 0; k < cols; ++k)
      m(i, k) = rat_from_json(row[static_cast<std::size_t>(k)]);
  }
  return m;
}

Json nfelem_to_json(const NFElem& x) {
  Json coords = Json::array();
  for (const Rat& c : x.coords()) coords.push_back(rat_to_json(c));
  return coords;
}

Json classification_to_json(const ClassificationReport& r) {
  Json j;
  j["class"] = surface_tag_name(r.cls.tag);
  if (r.cls.eta) j["eta"] = eta_name(*r.cls.eta);
  j["b1"] = r.b1;
  j["admits_complex"] = r.admits_complex;
  j["admits_kaehler"] = r.admits_kaehler;
  j["kodaira_dimension"] = kodaira_name(r.kodaira);
  j["witness"] = r.witness;
  if (r.finite_cover_hint) {
    Json h;
    h["index"] = r.finite_cover_hint->first;
    h["class"] = surface_tag_name(r.finite_cover_hint->second.tag);
    if (r.finite_cover_hint->second.eta)
      h["eta"] = eta_name(*r.finite_cover_hint->second.eta);
    j["finite_cover_hint"] = h;
  }
  return j;
}

Json lattice_class_to_json(const HyperellipticLatticeClass& c) {
  Json j;
  j["eta"] = eta_name(c.eta);
  j["pq"] = Json::array({c.pq.first, c.pq.second});
  j["st"] = Json::array({rat_to_json(c.st.first), rat_to_json(c.st.second)});
  return j;
}

Json inoue_s0_to_json(const InoueS0Report& r) {
  Json j;
  j["minimal_polynomial"] = r.minpoly.str();
  Json gens = Json::array();
  for (const auto& g : r.generators) {
    Json e;
    e["label"] = g.label;
    e["linear"] = nfelem_to_json(g.linear);
    e["translation"] = nfelem_to_json(g.translation);
    gens.push_back(e);
  }
  j["generators"] = gens;
  j["verified"] = r.verified;
  j["used_transpose"] = r.used_transpose;
  j["independent"] = r.independent;
  j["c_interval"] = Json::array(
      {rat_to_json(r.c_interval.lo), rat_to_json(r.c_interval.hi)});
  j["c_greater_than_one"] = r.c_greater_than_one;
  return j;
}

Json spm_solution_to_json(const SpmSolution& s) {
  Json j;
  j["minimal_polynomial"] = s.minpoly.str();
  j["a"] = Json::array({nfelem_to_json(s.a1), nfelem_to_json(s.a2)});
  j["b"] = Json::array({nfelem_to_json(s.b1), nfelem_to_json(s.b2)});
  j["c"] = Json::array(
      {nfelem_to_json(s.c1), nfelem_to_json(s.c2), nfelem_to_json(s.c3)});
  j["k_off"] = s.k_off;
  j["l_off"] = s.l_off;
  j["gamma"] = Json::array({rat_to_json(s.gamma.first), rat_to_json(s.gamma.second)});
  j["verified"] = s.verified;
  return j;
}

Json kodaira_law_to_json(const KodairaLawReport& r) {
  Json j;
  j["samples"] = r.samples;
  j["passing"] = r.passing;
  return j;
}

WangExtension wang_from_json(const Json& j) {
  if (!j.is_object()) throw InvalidInput("expected an extension object");
  if (!j.contains("fiber")) throw InvalidInput("missing \"fiber\"");
  const Json& f = j.at("fiber");
  if (f.is_string() && f.get<std::string>() == "Z3")
    return WangExtension::abelian(int_mat_from_json(j.at("monodromy"), 3, 3));
  if (f.is_string() && f.get<std::string>() == "Z2") {
    const Json& ms = j.at("monodromies");
    if (!ms.is_array() || ms.size() != 2)
      throw InvalidInput("Z2 fiber needs two monodromies");
    return WangExtension::rank2(int_mat_from_json(ms[0], 2, 2),
                                int_mat_from_json(ms[1], 2, 2));
  }
  if (f.is_object() && f.contains("Lambda")) {
    int n = f.at("Lambda").get<int>();
    IntMat b = int_mat_from_json(j.at("B"), 2, 2);
    int eps = j.at("eps").get<int>();
    std::optional<std::pair<int, int>> off;
    if (j.contains("offsets")) {
      const Json& o = j.at("offsets");
      if (!o.is_array() || o.size() != 2) throw InvalidInput("bad offsets");
      off = std::make_pair(o[0].get<int>(), o[1].get<int>());
    }
    return WangExtension::heisenberg(n, b, eps, off);
  }
  throw InvalidInput("fiber must be \"Z3\", \"Z2\" or {\"Lambda\": n}");
}

LieAlgebra liealg_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("brackets"))
    throw InvalidInput("expected {\"dim\": n, \"brackets\": [[i, j, [..]], ..]}");
  int dim = j.at("dim").get<int>();
  std::vector<std::tuple<int, int, std::vector<Rat>>> triples;
  for (const Json& t : j.at("brackets")) {
    if (!t.is_array() || t.size() != 3) throw InvalidInput("bad bracket triple");
    std::vector<Rat> coeffs;
    for (const Json& c : t[2]) coeffs.push_back(rat_from_json(c));
    triples.emplace_back(t[0].get<int>(), t[1].get<int>(), coeffs);
  }
  return liealg_from_triples(dim, triples);
}

CatalogId catalog_id_from_string(const std::string& s) {
  auto base = [&](CatalogTag t) {
    CatalogId id;
    id.tag = t;
    return id;
  };
  if (s == "Torus4") return base(CatalogTag::Torus4);
  if (s == "Hyperelliptic4") return base(CatalogTag::Hyperelliptic4);
  if (s == "PrimaryKodaira4") return base(CatalogTag::PrimaryKodaira4);
  if (s == "SecondaryKodaira4") return base(CatalogTag::SecondaryKodaira4);
  if (s == "InoueS0") return base(CatalogTag::InoueS0);
  if (s == "InoueSpm4") return base(CatalogTag::InoueSpm4);
  if (s == "Example5") return base(CatalogTag::Example5);
  if (s.rfind("Example4", 0) == 0) {
    CatalogId id = base(CatalogTag::Example4);
    if (s == "Example4") return id;
    int k = 0, l = 0;
    char lp = 0, comma = 0, rp = 0;
    std::istringstream is(s.substr(8));
    if ((is >> lp >> k >> comma >> l >> rp) && lp == '(' && comma == ',' &&
        rp == ')' && k >= 1 && l >= 1) {
      id.k = k;
      id.l = l;
      return id;
    }
    throw InvalidInput("bad Example4 parameters: " + s);
  }
  throw InvalidInput("unknown catalog id: " + s);
}

std::string catalog_id_to_string(const CatalogId& id) {
  switch (id.tag) {
    case CatalogTag::Torus4:
      return "Torus4";
    case CatalogTag::Hyperelliptic4:
      return "Hyperelliptic4";
    case CatalogTag::PrimaryKodaira4:
      return "PrimaryKodaira4";
    case CatalogTag::SecondaryKodaira4:
      return "SecondaryKodaira4";
    case CatalogTag::InoueS0:
      return "InoueS0";
    case CatalogTag::InoueSpm4:
      return "InoueSpm4";
    case CatalogTag::Example4:
      return "Example4(" + std::to_string(id.k) + "," + std::to_string(id.l) + ")";
    case CatalogTag::Example5:
      return "Example5";
  }
  return "?";
}

}  // namespace solv
