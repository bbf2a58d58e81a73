#include "spm/json_io.hpp"

#include "spm/error.hpp"

namespace spm {

namespace {

template <class F>
auto guarded(const char* what, F&& body) {
  try {
    return body();
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::parse_error, std::string("malformed ") + what + ": " + e.what());
  }
}

std::size_t vertex_from_json(const Json& v, std::size_t n) {
  const auto one_based = v.get<std::int64_t>();
  if (one_based < 1 || static_cast<std::size_t>(one_based) > n) {
    throw Error(ErrorCode::unknown_vertex, "vertex " + std::to_string(one_based) + " out of range");
  }
  return static_cast<std::size_t>(one_based - 1);
}

Json residual_json(const std::map<std::pair<std::size_t, std::size_t>, std::size_t>& residual) {
  Json out = Json::array();
  for (const auto& [ij, count] : residual) {
    out.push_back({{"i", ij.first + 1}, {"j", ij.second + 1}, {"count", count}});
  }
  return out;
}

Json term_json(const Species& sp, const Path& p, Scalar coeff, bool with_head) {
  Json arrows = Json::array();
  for (std::uint32_t a : p.arrows) arrows.push_back(sp.quiver().arrow(a).id);
  Json t = {{"coeff", coeff.code}, {"omegas", p.omegas}, {"arrows", std::move(arrows)}};
  if (with_head) t["head"] = p.head + 1;
  return t;
}

void read_terms(const Species& sp, const Json& terms, AlgebraElement& out, bool cyclic) {
  const BaseField& k = sp.base();
  for (const Json& t : terms) {
    Path p;
    for (const Json& id : t.at("arrows")) {
      auto idx = sp.quiver().find(id.get<std::string>());
      if (!idx) throw Error(ErrorCode::unknown_arrow, "unknown arrow " + id.get<std::string>());
      p.arrows.push_back(static_cast<std::uint32_t>(*idx));
    }
    p.omegas = t.at("omegas").get<std::vector<std::uint32_t>>();
    if (t.contains("head")) {
      p.head = static_cast<std::uint32_t>(vertex_from_json(t.at("head"), sp.vertex_count()));
    } else if (!p.arrows.empty()) {
      p.head = static_cast<std::uint32_t>(sp.head(p.arrows.front()));
    } else {
      throw Error(ErrorCode::invalid_argument, "a lazy path needs a head vertex");
    }
    if (!is_valid_path(sp, p)) throw Error(ErrorCode::invalid_argument, "term is not a valid decorated path");
    if (cyclic && !is_cyclic_path(sp, p)) throw Error(ErrorCode::not_cyclic, "potential term is not a cycle");
    const auto code = t.at("coeff").get<std::uint64_t>();
    if (code >= k.order()) throw Error(ErrorCode::invalid_argument, "coefficient outside the base field");
    out.add_term(p, Scalar{code});
  }
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::parse_error, e.what());
  }
}

Json tower_json(const FieldTower& tower) {
  return {{"p", tower.p()}, {"weights", tower.weights()}, {"c", tower.c()}, {"base_degree", tower.base_degree()}};
}

FieldTower tower_from_json(const Json& j) {
  return guarded("tower", [&] {
    const auto p = j.at("p").get<std::uint32_t>();
    const auto weights = j.at("weights").get<std::vector<unsigned>>();
    const unsigned r = j.value("base_degree", 1U);
    if (j.contains("c")) return FieldTower::with_constant(p, weights, j.at("c").get<std::uint32_t>(), r);
    FieldTower t = FieldTower::build(p, weights);
    return r == 1 ? t : t.extend_scalars(r);
  });
}

Json matrix_json(const ExchangeMatrix& b) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < b.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < b.size(); ++j) row.push_back(b.at(i, j));
    rows.push_back(std::move(row));
  }
  return {{"n", b.size()}, {"d", b.skew_symmetrizer()}, {"rows", std::move(rows)}};
}

ExchangeMatrix matrix_from_json(const Json& j) {
  return guarded("matrix", [&] {
    auto d = j.at("d").get<std::vector<unsigned>>();
    auto rows = j.at("rows").get<std::vector<std::vector<std::int64_t>>>();
    if (j.contains("n") && j.at("n").get<std::size_t>() != d.size()) {
      throw Error(ErrorCode::malformed_matrix, "n does not match the skew-symmetrizer");
    }
    ExchangeMatrix b(std::move(d), std::move(rows));
    if (!validate(b)) throw Error(ErrorCode::malformed_matrix, "matrix is not skew-symmetrized by D");
    return b;
  });
}

Json quiver_json(const WeightedQuiver& q) {
  Json arrows = Json::array();
  for (const Arrow& a : q.arrows()) arrows.push_back({{"id", a.id}, {"from", a.source + 1}, {"to", a.target + 1}});
  return {{"weights", q.weights()}, {"arrows", std::move(arrows)}};
}

WeightedQuiver quiver_from_json(const Json& j) {
  return guarded("quiver", [&] {
    auto weights = j.at("weights").get<std::vector<unsigned>>();
    std::vector<Arrow> arrows;
    for (const Json& a : j.at("arrows")) {
      arrows.push_back({a.at("id").get<std::string>(), vertex_from_json(a.at("from"), weights.size()),
                        vertex_from_json(a.at("to"), weights.size())});
    }
    return WeightedQuiver(std::move(weights), std::move(arrows));
  });
}

Json element_json(const AlgebraElement& x) {
  Json terms = Json::array();
  for (const auto& [p, a] : x.terms()) terms.push_back(term_json(x.species(), p, a, true));
  return {{"truncation", x.truncation()}, {"terms", std::move(terms)}};
}

AlgebraElement element_from_json(const SpeciesPtr& species, const Json& j) {
  return guarded("element", [&] {
    AlgebraElement out(species, j.value("truncation", kDefaultTruncation));
    read_terms(*species, j.at("terms"), out, false);
    return out;
  });
}

Json potential_json(const Potential& s) {
  Json terms = Json::array();
  for (const auto& [p, a] : s.element().terms()) terms.push_back(term_json(s.species(), p, a, false));
  return {{"truncation", s.truncation()}, {"terms", std::move(terms)}};
}

Potential potential_from_json(const SpeciesPtr& species, const Json& j) {
  return guarded("potential", [&] {
    AlgebraElement out(species, j.value("truncation", kDefaultTruncation));
    read_terms(*species, j.at("terms"), out, true);
    return Potential(std::move(out));
  });
}

Json sp_json(const SpeciesWithPotential& sp) {
  return {{"tower", tower_json(sp.tower())}, {"quiver", quiver_json(sp.quiver())},
          {"potential", potential_json(sp.potential)}};
}

SpeciesWithPotential sp_from_json(const Json& j) {
  return guarded("species with potential", [&] {
    const SpeciesPtr species = make_species(tower_from_json(j.at("tower")), quiver_from_json(j.at("quiver")));
    if (!j.contains("potential")) return SpeciesWithPotential(species);
    return SpeciesWithPotential(species, potential_from_json(species, j.at("potential")));
  });
}

Json report_json(const ReductionReport& report) {
  Json pairs = Json::array();
  for (const auto& [p, q] : report.removed_pairs) pairs.push_back({p, q});
  Json out = {{"removed_pairs", std::move(pairs)},
              {"residual_2cycles", residual_json(report.residual_2cycles)},
              {"rounds", report.rounds},
              {"horizon", report.horizon},
              {"unstabilized", report.unstabilized}};
  Json subst = Json::object();
  if (report.substitution) {
    const Species& sp = *report.substitution->species_ptr();
    for (const auto& [arrow, img] : report.substitution->images()) subst[sp.quiver().arrow(arrow).id] = element_json(img);
  }
  out["substitution"] = std::move(subst);
  return out;
}

Json trace_json(const NondegeneracyTrace& trace) {
  Json steps = Json::array();
  for (const NondegeneracyStep& s : trace.steps) {
    steps.push_back({{"vertex", s.vertex + 1},
                     {"arrow_count", s.arrow_count},
                     {"multiplicities", s.multiplicities},
                     {"residual_2cycles", residual_json(s.residual_2cycles)},
                     {"removed_pairs", s.removed_pairs},
                     {"potential_terms", s.potential_terms},
                     {"horizon", s.horizon}});
  }
  Json out = {{"nondegenerate", trace.nondegenerate}, {"steps", std::move(steps)}};
  out["failed_step"] = trace.failed_step ? Json(*trace.failed_step + 1) : Json(nullptr);
  return out;
}

Json search_json(const SearchResult& result) {
  Json per_r = Json::array();
  for (const auto& [r, n] : result.attempts_per_r) per_r.push_back({{"r", r}, {"attempts", n}});
  Json out = {{"found", result.witness.has_value()},
              {"attempts_per_r", std::move(per_r)},
              {"attempts", result.total_attempts()},
              {"horizon_attempts", result.horizon_attempts}};
  if (result.witness) {
    const SearchWitness& w = *result.witness;
    out["witness"] = {{"extension_degree", w.extension_degree},
                      {"attempts", w.attempts},
                      {"seed", w.seed},
                      {"candidate_seed", w.candidate_seed},
                      {"candidate_index", w.candidate_index},
                      {"maxlen", w.maxlen},
                      {"state", sp_json(w.state)},
                      {"trace", trace_json(w.trace)}};
  }
  return out;
}

Json compatibility_json(const CompatibilityReport& report) {
  Json steps = Json::array();
  for (const CompatibilityStep& s : report.steps) {
    steps.push_back({{"vertex", s.vertex + 1},
                     {"matrix", matrix_json(s.matrix)},
                     {"from_matrix", s.from_matrix},
                     {"quiver", s.quiver},
                     {"species", s.species ? Json(*s.species) : Json(nullptr)},
                     {"species_2_acyclic", s.species_2_acyclic},
                     {"residual_2cycles", residual_json(s.residual_2cycles)},
                     {"matrix_quiver_agree", s.matrix_quiver_agree},
                     {"species_agree", s.species_agree}});
  }
  Json out = {{"levels_agree", report.levels_agree},
              {"species_level", report.species_level},
              {"steps", std::move(steps)},
              {"table", report.table()}};
  out["degenerate_step"] = report.degenerate_step ? Json(*report.degenerate_step + 1) : Json(nullptr);
  if (report.initial) out["potential"] = potential_json(report.initial->potential);
  return out;
}

DocumentKind document_kind(const Json& j) {
  if (!j.is_object()) throw Error(ErrorCode::parse_error, "document must be a JSON object");
  if (j.contains("tower")) return DocumentKind::species;
  if (j.contains("rows")) return DocumentKind::matrix;
  if (j.contains("arrows")) return DocumentKind::quiver;
  throw Error(ErrorCode::parse_error, "document is neither a matrix, a quiver nor a species with potential");
}

}  // namespace spm
