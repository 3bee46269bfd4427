#include "hnnembed/json_io.hpp"

#include "hnnembed/error.hpp"
#include "hnnembed/syntax.hpp"

namespace hnnembed {

namespace {

Json word_json(const Word& w, const Alphabet& a) { return format_word(w, a); }

Json letter_json(Letter l, const Alphabet& a) { return format_word(Word{l}, a); }

Json rotation_json(const Presentation& p, const RotationRef& r) {
  return {{"relator", p.label(r.relator)}, {"offset", r.offset}, {"inverted", r.inverted}};
}

}  // namespace

Json ratio_json(const Ratio& r) { return {{"num", r.num}, {"den", r.den}}; }

Json presentation_json(const Presentation& p) {
  Json rels = Json::array();
  for (std::size_t i = 0; i < p.size(); ++i)
    rels.push_back({{"label", p.label(i)}, {"word", word_json(p.relator(i), p.alphabet())}});
  return {{"generators", p.alphabet().names()}, {"relators", rels}};
}

Json pieces_json(const Presentation& p, const PieceReport& report) {
  Json rels = Json::array();
  for (std::size_t i = 0; i < p.size(); ++i) {
    const RelatorPieces& rp = report.relators[i];
    Json pieces = Json::array();
    for (const Piece& piece : rp.pieces) {
      Json occ = Json::array();
      for (const auto& o : piece.occurrences) occ.push_back(rotation_json(p, o));
      pieces.push_back({{"word", word_json(piece.word, p.alphabet())}, {"offset", piece.offset}, {"occurrences", occ}});
    }
    Json rel = {{"label", p.label(i)},
                {"word", word_json(p.relator(i), p.alphabet())},
                {"length", p.relator(i).size()},
                {"maxPiece", rp.max_piece},
                {"pieces", pieces}};
    rel["minDecomposition"] = rp.min_decomposition ? Json(*rp.min_decomposition) : Json(nullptr);
    rels.push_back(std::move(rel));
  }
  return {{"symmetrized", report.symmetrized}, {"relators", rels}};
}

Json cp_json(const Presentation& p, const CpResult& r, std::size_t pbound) {
  Json witnesses = Json::array();
  for (const auto& w : r.witnesses) {
    Json parts = Json::array();
    for (const Word& part : w.decomposition) parts.push_back(word_json(part, p.alphabet()));
    witnesses.push_back({{"relator", p.label(w.relator)}, {"start", w.start}, {"decomposition", parts}});
  }
  return {{"p", pbound}, {"verdict", r.verdict}, {"witnesses", witnesses}};
}

Json cprime_json(const Presentation& p, const CprimeResult& r, const Ratio& lambda) {
  Json out = {{"lambda", ratio_json(lambda)}, {"verdict", r.verdict}};
  if (r.worst) {
    out["worst"] = {{"relator", p.label(r.worst->relator)},
                    {"piece", word_json(r.worst->piece, p.alphabet())},
                    {"ratio", ratio_json(r.worst->ratio)}};
  } else {
    out["worst"] = nullptr;
  }
  return out;
}

Json quotient_json(const Presentation& parent, const QuotientPresentation& q) {
  Json rels = Json::array();
  for (const auto& r : q.relators)
    rels.push_back({{"source", parent.label(r.source)}, {"word", word_json(r.word, q.alphabet)}});
  Json dropped = Json::array();
  for (auto r : q.dropped) dropped.push_back(parent.label(r));
  return {{"generators", q.alphabet.names()}, {"relators", rels}, {"dropped", dropped}};
}

Json no_extra_powers_json(const Presentation& parent, const NoExtraPowersResult& r) {
  Json v = Json::array();
  for (const auto& x : r.violations)
    v.push_back({{"relator", parent.label(x.relator)},
                 {"word", word_json(parent.relator(x.relator), parent.alphabet())},
                 {"exponentBefore", x.exponent_before},
                 {"exponentAfter", x.exponent_after},
                 {"projectsToPoint", x.projects_to_point}});
  return {{"verdict", r.verdict}, {"violations", v}};
}

Json no_duplicates_json(const Presentation& parent, const NoDuplicatesResult& r) {
  auto pairs = [&](const auto& list) {
    Json out = Json::array();
    for (const auto& [a, b] : list) out.push_back({parent.label(a), parent.label(b)});
    return out;
  };
  return {{"verdict", r.verdict},
          {"collisions", pairs(r.collisions)},
          {"inverseCollisions", pairs(r.inverse_collisions)}};
}

Json graph_json(const CoreGraph& g, const Alphabet& alphabet) {
  Json edges = Json::array();
  for (const auto& e : g.edges())
    edges.push_back({{"from", e.from}, {"to", e.to}, {"label", alphabet.name(e.label)}});
  Json out = {{"vertices", g.vertex_count()},
              {"basepoint", g.basepoint()},
              {"edges", edges},
              {"folded", g.folded()},
              {"basepointDegree", basepoint_degree(g)}};
  out["rank"] = g.connected() ? Json(rank(g)) : Json(nullptr);
  return out;
}

Json certificate_json(const EmbeddingCertificate& cert, const PartialAscHNN& g) {
  const Presentation& q = cert.quotient_presentation;
  const Presentation x = hnn_presentation(g);
  Json out;
  out["construction"] = cert.construction == Construction::ascending ? "ascending" : "irreducible";
  Json new_gens = Json::array();
  for (auto c : cert.new_generators) new_gens.push_back(g.alphabet.name(c));
  out["newGenerators"] = new_gens;
  Json w = Json::array();
  for (std::size_t i = 0; i < q.size(); ++i)
    w.push_back({{"source", x.label(cert.w_sources[i])}, {"word", word_json(q.relator(i), q.alphabet())}});
  out["w"] = {{"generators", q.alphabet().names()}, {"relators", w}};
  out["pieces"] = pieces_json(q, cert.pieces);
  out["c7"] = cp_json(q, cert.c7, 7);
  out["cprime17"] = cprime_json(q, cert.cprime17, Ratio{1, 7});
  Json powers = Json::array();
  for (std::size_t i = 0; i < cert.powers.size(); ++i)
    powers.push_back(
        {{"relator", q.label(i)}, {"exponent", cert.powers[i].exponent}, {"properPower", cert.powers[i].proper_power}});
  out["powers"] = powers;
  out["noProperPowers"] = cert.no_proper_powers;
  out["distinct"] = cert.distinct;
  out["noExtraPowers"] = no_extra_powers_json(x, cert.no_extra_powers);
  out["noDuplicates"] = no_duplicates_json(x, cert.no_duplicates);
  out["liftable"] = cert.liftable;
  out["monomorphism"] = cert.monomorphism;
  out["imageRank"] = cert.image_rank;
  out["quotientMatchesW"] = cert.quotient_matches_w;
  out["hRelatorsPreserved"] = cert.h_relators_preserved;
  if (cert.irreducible) {
    const auto& e = *cert.irreducible;
    Json labels = Json::array();
    for (Letter l : e.inputs.chosen_labels) labels.push_back(letter_json(l, g.alphabet));
    Json u = Json::array();
    for (const Word& word : e.inputs.u_words) u.push_back(word_json(word, g.alphabet));
    Json v = Json::array();
    for (const Word& word : e.inputs.v_words) v.push_back(word_json(word, g.alphabet));
    Json coverage = Json::array();
    for (const auto& c : e.coverage) coverage.push_back(c.verdict);
    out["irreducible"] = {{"labels", labels},
                          {"uWords", u},
                          {"vWords", v},
                          {"basepointDegree", e.basepoint_degree},
                          {"degreeBound", e.degree_bound},
                          {"labelsFresh", e.labels_fresh},
                          {"shape", e.shape},
                          {"digramCoverage", coverage},
                          {"wedgeCheck", e.wedge_check},
                          {"coreIsWedge", e.core_is_wedge}};
  }
  out["failures"] = cert.failures();
  out["allTrue"] = cert.all_true();
  return out;
}

Json dehn_json(const Presentation& p, const DehnResult& r) {
  Json steps = Json::array();
  for (const auto& s : r.steps)
    steps.push_back({{"conjugator", word_json(s.conjugator, p.alphabet())},
                     {"relator", p.label(s.relator.relator)},
                     {"inverted", s.relator.inverted},
                     {"offset", s.relator.offset},
                     {"position", s.position},
                     {"length", s.length},
                     {"lengthBefore", s.word_length_before},
                     {"lengthAfter", s.word_length_after}});
  return {{"trivial", r.trivial}, {"residue", word_json(r.residue, p.alphabet())}, {"steps", steps}};
}

Json area_json(const Presentation& p, const AreaReport& r) {
  Json table = Json::array();
  for (const auto& s : r.table)
    table.push_back({{"word", word_json(s.word, p.alphabet())},
                     {"length", s.length},
                     {"area", s.area},
                     {"ratio", ratio_json(s.ratio)},
                     {"pieces", s.pieces}});
  return {{"areaMeasure", "dehn-steps"},
          {"maxK", ratio_json(r.max_k)},
          {"withinPieceBound", r.within_piece_bound},
          {"table", table}};
}

Construction construction_from_json(const Json& cert) {
  const auto it = cert.find("construction");
  if (it == cert.end() || !it->is_string()) throw Error("certificate has no construction");
  if (*it == "ascending") return Construction::ascending;
  if (*it == "irreducible") return Construction::irreducible;
  throw Error("unknown construction " + it->dump());
}

std::optional<IrreducibleInputs> irreducible_inputs_from_json(const Json& cert, const Alphabet& g) {
  const auto it = cert.find("irreducible");
  if (it == cert.end()) return std::nullopt;
  try {
    IrreducibleInputs in;
    for (const auto& l : it->at("labels")) {
      const Word w = parse_word(l.get<std::string>(), g);
      if (w.size() != 1) throw Error("a label must be a single letter");
      in.chosen_labels.push_back(w[0]);
    }
    for (const auto& u : it->at("uWords")) in.u_words.push_back(parse_word(u.get<std::string>(), g));
    for (const auto& v : it->at("vWords")) in.v_words.push_back(parse_word(v.get<std::string>(), g));
    return in;
  } catch (const Json::exception& e) {
    throw Error(std::string("malformed irreducible section: ") + e.what());
  }
}

}  // namespace hnnembed
