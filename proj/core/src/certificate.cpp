#include "hnnembed/certificate.hpp"

#include <algorithm>

#include "hnnembed/error.hpp"
#include "hnnembed/hnn_embed.hpp"
#include "hnnembed/stallings.hpp"

namespace hnnembed {

std::vector<std::string> EmbeddingCertificate::failures() const {
  std::vector<std::string> out;
  auto need = [&](bool ok, const char* name) {
    if (!ok) out.emplace_back(name);
  };
  need(c7.verdict, "c7");
  need(cprime17.verdict, "cprime17");
  need(no_proper_powers, "noProperPowers");
  need(distinct, "distinct");
  need(no_extra_powers.verdict, "noExtraPowers");
  need(no_duplicates.verdict, "noDuplicates");
  need(liftable, "liftable");
  need(monomorphism, "monomorphism");
  need(quotient_matches_w, "quotientMatchesW");
  need(h_relators_preserved, "hRelatorsPreserved");
  if (construction == Construction::irreducible) {
    if (!irreducible) {
      out.emplace_back("irreducible");
      return out;
    }
    const auto& e = *irreducible;
    need(e.basepoint_degree <= e.degree_bound, "basepointDegree");
    need(e.labels_fresh, "labelsFresh");
    need(e.shape, "shape");
    need(std::all_of(e.coverage.begin(), e.coverage.end(), [](const DigramCoverage& c) { return c.verdict; }),
         "digramCoverage");
    need(e.wedge_check, "wedgeCheck");
    need(e.core_is_wedge, "coreIsWedge");
  }
  return out;
}

namespace {

Word translate(const Word& w, const Alphabet& from, const Alphabet& to) {
  Word out;
  for (Letter l : w) out.push_back(Letter{to.index_of(from.name(l.gen)), l.sign});
  return out;
}

void check_extends(const PartialAscHNN& h, const PartialAscHNN& g) {
  auto problems = validate(g);
  if (!problems.empty()) throw Error("G is not a valid partial ascending HNN extension: " + problems.front());
  for (const auto& name : h.alphabet.names())
    if (!g.alphabet.find(name)) throw Error("G does not extend H: generator " + name + " is missing");
  if (g.alphabet.name(g.stable) != h.alphabet.name(h.stable))
    throw Error("G does not extend H: stable letters differ");
  for (std::size_t i = 0; i < h.ascending.size(); ++i) {
    const std::string& name = h.alphabet.name(h.ascending[i]);
    const auto gi = g.alphabet.index_of(name);
    if (std::find(g.ascending.begin(), g.ascending.end(), gi) == g.ascending.end())
      throw Error("G does not extend H: " + name + " is not ascending in G");
    if (!(g.image_of(gi) == translate(h.images[i], h.alphabet, g.alphabet)))
      throw Error("G does not extend H: the image of " + name + " changed");
  }
}

// Letters of the generators outside H, others deleted.
Word rho(const Word& w, const std::vector<bool>& in_h) {
  Word out;
  for (Letter l : w)
    if (!in_h[l.gen]) out.push_back(l);
  return out;
}

IrreducibleEvidence irreducible_evidence(const PartialAscHNN& h, const PartialAscHNN& g,
                                         const std::vector<std::uint32_t>& new_generators,
                                         const IrreducibleInputs& inputs) {
  IrreducibleEvidence e;
  e.inputs = inputs;
  const std::size_t free_count = h.free.size();

  std::vector<Word> a_images;
  for (const Word& a : h.images) a_images.push_back(translate(a, h.alphabet, g.alphabet));
  const CoreGraph core = subgroup_core(a_images);
  e.basepoint_degree = basepoint_degree(core);
  e.degree_bound = 2 * h.ascending.size();

  // Labels: 2|J| distinct non-stable letters of H not read at the basepoint.
  const auto& labels = inputs.chosen_labels;
  const auto used = core.outgoing_labels(core.basepoint());
  e.labels_fresh = labels.size() == 2 * free_count;
  for (std::size_t i = 0; i < labels.size() && e.labels_fresh; ++i) {
    const Letter l = labels[i];
    const bool in_h = l.gen < g.alphabet.size() && h.alphabet.find(g.alphabet.name(l.gen)).has_value();
    if (!in_h || l.gen == g.stable || std::find(used.begin(), used.end(), l) != used.end() ||
        std::find(labels.begin(), labels.begin() + static_cast<std::ptrdiff_t>(i), l) !=
            labels.begin() + static_cast<std::ptrdiff_t>(i))
      e.labels_fresh = false;
  }

  // Shape of the new images.
  std::vector<Word> loops;
  for (auto b : h.free) loops.push_back(g.image_of(g.alphabet.index_of(h.alphabet.name(b))));
  for (auto c : new_generators) loops.push_back(g.image_of(c));
  e.shape = e.labels_fresh && inputs.u_words.size() == free_count &&
            inputs.v_words.size() == new_generators.size();
  for (std::size_t j = 0; e.shape && j < free_count; ++j) {
    const Word& b = loops[j];
    const Word& u = inputs.u_words[j];
    e.shape = b.size() >= u.size() + 2 && b.front() == labels[j + free_count] &&
              b.back() == labels[j].inverse() && b.subword(1, u.size()) == u;
  }
  for (std::size_t k = 0; e.shape && k < new_generators.size(); ++k) {
    const Word& c = loops[free_count + k];
    const Word& v = inputs.v_words[k];
    const Letter ck = gen(new_generators[k]);
    e.shape = c.size() >= v.size() + 2 && c.front() == ck && c.back() == ck && c.subword(1, v.size()) == v;
  }

  // Digram coverage over the non-stable generators of G.
  std::vector<std::string> names;
  std::vector<std::int64_t> local(g.alphabet.size(), -1);
  for (std::uint32_t x = 0; x < g.alphabet.size(); ++x) {
    if (x == g.stable) continue;
    local[x] = static_cast<std::int64_t>(names.size());
    names.push_back(g.alphabet.name(x));
  }
  const Alphabet digram_alphabet(names);
  auto coverage = [&](const Word& w) {
    Word mapped;
    for (Letter l : w) {
      if (l.gen >= local.size() || local[l.gen] < 0) return DigramCoverage{false, {}};
      mapped.push_back(Letter{static_cast<std::uint32_t>(local[l.gen]), l.sign});
    }
    if (mapped.empty() || !is_cyclically_reduced(mapped)) return DigramCoverage{false, {}};
    return contains_all_reduced_digrams(mapped, digram_alphabet);
  };
  for (const Word& u : inputs.u_words) e.coverage.push_back(coverage(u));
  for (const Word& v : inputs.v_words) e.coverage.push_back(coverage(v));

  e.wedge_check = wedge_extension_check(core, loops);
  if (std::all_of(loops.begin(), loops.end(), [](const Word& w) { return !w.empty(); })) {
    std::vector<Word> all_images;
    for (const Word& w : g.images) all_images.push_back(w);
    e.core_is_wedge =
        canonical_form(subgroup_core(all_images)) == canonical_form(trim_to_core(fold(wedge(core, loops))));
  }
  return e;
}

}  // namespace

EmbeddingCertificate certify_embedding(const PartialAscHNN& h, const PartialAscHNN& g, Construction construction,
                                       const std::optional<IrreducibleInputs>& irreducible) {
  check_extends(h, g);
  if (construction == Construction::irreducible && !irreducible)
    throw Error("the irreducible certificate needs the chosen labels and digram words");

  EmbeddingCertificate cert;
  cert.construction = construction;
  std::vector<bool> in_h(g.alphabet.size(), false);
  for (std::uint32_t x = 0; x < g.alphabet.size(); ++x) {
    in_h[x] = h.alphabet.find(g.alphabet.name(x)).has_value();
    if (!in_h[x]) cert.new_generators.push_back(x);
  }

  const SubcomplexSpec spec = build_X_and_Y(h, g);
  const Presentation& x = spec.parent();

  // H's relators appear verbatim in G.
  const Presentation hp = hnn_presentation(h);
  cert.h_relators_preserved = std::all_of(hp.relators().begin(), hp.relators().end(), [&](const Word& r) {
    const Word t = translate(r, h.alphabet, g.alphabet);
    return std::find(x.relators().begin(), x.relators().end(), t) != x.relators().end();
  });

  // W: one word per relator outside Y, read from the images.
  const QuotientPresentation q = quotient(spec);
  std::vector<Word> w_words;
  std::vector<std::string> w_labels;
  for (std::size_t r = 0; r < x.size(); ++r) {
    if (spec.has_relator(r)) continue;
    const std::uint32_t source = g.ascending[r];
    Word w;
    if (!in_h[source]) w.push_back(inv(source));
    w.append(g.images[r]);
    Word core = cyclic_reduce(rho(w, in_h)).core;
    if (core.empty()) throw Error("relator " + x.label(r) + " has trivial W word");
    w_words.push_back(project(spec, q, core));
    w_labels.push_back(x.label(r));
    cert.w_sources.push_back(r);
  }
  cert.quotient_presentation = Presentation(q.alphabet, w_words, w_labels);

  cert.quotient_matches_w = q.relators.size() == w_words.size();
  for (std::size_t i = 0; cert.quotient_matches_w && i < w_words.size(); ++i)
    cert.quotient_matches_w = q.relators[i].source == cert.w_sources[i] &&
                              cyclically_equal_up_to_inversion(cyclic_reduce(q.relators[i].word).core, w_words[i]);

  cert.pieces = compute_pieces(cert.quotient_presentation);
  cert.c7 = check_Cp(cert.quotient_presentation, cert.pieces, 7);
  cert.cprime17 = check_Cprime(cert.quotient_presentation, cert.pieces, 1, 7);

  cert.no_proper_powers = true;
  for (const Word& w : w_words) {
    WordPower p{exponent(w), false};
    p.proper_power = p.exponent > 1;
    cert.no_proper_powers = cert.no_proper_powers && !p.proper_power;
    cert.powers.push_back(p);
  }
  cert.distinct = true;
  for (std::size_t i = 0; i < w_words.size(); ++i)
    for (std::size_t j = i + 1; j < w_words.size(); ++j)
      if (cyclically_equal_up_to_inversion(w_words[i], w_words[j])) cert.distinct = false;

  cert.no_extra_powers = check_no_extra_powers(spec);
  cert.no_duplicates = check_no_duplicates(spec);
  cert.liftable = !liftability_counterexample_search(spec).has_value();

  std::vector<Word> reduced;
  bool nonempty = true;
  for (const Word& w : g.images) {
    reduced.push_back(free_reduce(w));
    nonempty = nonempty && !reduced.back().empty();
  }
  if (nonempty && !reduced.empty()) {
    cert.image_rank = rank(fold(bouquet(reduced)));
    cert.monomorphism = cert.image_rank == g.images.size();
  }

  if (construction == Construction::irreducible)
    cert.irreducible = irreducible_evidence(h, g, cert.new_generators, *irreducible);
  return cert;
}

}  // namespace hnnembed
