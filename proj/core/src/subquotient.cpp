#include "hnnembed/subquotient.hpp"

#include <algorithm>

#include "hnnembed/error.hpp"

namespace hnnembed {

SubcomplexSpec::SubcomplexSpec(Presentation parent, std::vector<std::uint32_t> sub_generators,
                               std::vector<std::size_t> sub_relators)
    : parent_(std::move(parent)), sub_generators_(std::move(sub_generators)), sub_relators_(std::move(sub_relators)) {
  generator_in_y_.assign(parent_.alphabet().size(), false);
  relator_in_y_.assign(parent_.size(), false);
  std::sort(sub_generators_.begin(), sub_generators_.end());
  sub_generators_.erase(std::unique(sub_generators_.begin(), sub_generators_.end()), sub_generators_.end());
  std::sort(sub_relators_.begin(), sub_relators_.end());
  sub_relators_.erase(std::unique(sub_relators_.begin(), sub_relators_.end()), sub_relators_.end());
  for (auto g : sub_generators_) {
    if (g >= generator_in_y_.size()) throw Error("subcomplex generator out of range");
    generator_in_y_[g] = true;
  }
  for (auto r : sub_relators_) {
    if (r >= relator_in_y_.size()) throw Error("subcomplex relator out of range");
    for (Letter l : parent_.relator(r))
      if (!generator_in_y_[l.gen])
        throw Error("relator " + parent_.label(r) + " uses generator '" + parent_.alphabet().name(l.gen) +
                    "' outside the subcomplex");
    relator_in_y_[r] = true;
  }
}

SubcomplexSpec SubcomplexSpec::killing(Presentation parent, std::vector<std::uint32_t> generators) {
  std::vector<bool> in(parent.alphabet().size(), false);
  for (auto g : generators) in.at(g) = true;
  std::vector<std::size_t> relators;
  for (std::size_t r = 0; r < parent.size(); ++r) {
    const Word& w = parent.relator(r);
    if (std::all_of(w.begin(), w.end(), [&](Letter l) { return in[l.gen]; })) relators.push_back(r);
  }
  return SubcomplexSpec(std::move(parent), std::move(generators), std::move(relators));
}

Presentation QuotientPresentation::presentation(const Presentation& parent) const {
  std::vector<Word> words;
  std::vector<std::string> labels;
  for (const auto& pr : relators) {
    if (pr.word.empty()) continue;
    words.push_back(pr.word);
    labels.push_back(parent.label(pr.source));
  }
  return Presentation(alphabet, std::move(words), std::move(labels), RelatorPolicy::literal);
}

Word project(const SubcomplexSpec& spec, const QuotientPresentation& q, const Word& w) {
  std::vector<std::uint32_t> index_of(spec.parent().alphabet().size(), 0);
  for (std::uint32_t i = 0; i < q.generator_of.size(); ++i) index_of[q.generator_of[i]] = i;
  Word out;
  for (Letter l : w)
    if (!spec.has_generator(l.gen)) out.push_back(Letter{index_of[l.gen], l.sign});
  return out;
}

QuotientPresentation quotient(const SubcomplexSpec& spec) {
  const Presentation& parent = spec.parent();
  QuotientPresentation q;
  std::vector<std::string> names;
  for (std::uint32_t g = 0; g < parent.alphabet().size(); ++g) {
    if (spec.has_generator(g)) continue;
    q.generator_of.push_back(g);
    names.push_back(parent.alphabet().name(g));
  }
  q.alphabet = Alphabet(std::move(names));
  for (std::size_t r = 0; r < parent.size(); ++r) {
    if (spec.has_relator(r)) {
      q.dropped.push_back(r);
      continue;
    }
    q.relators.push_back({r, project(spec, q, parent.relator(r))});
  }
  return q;
}

NoExtraPowersResult check_no_extra_powers(const SubcomplexSpec& spec) {
  const auto q = quotient(spec);
  NoExtraPowersResult out;
  for (const auto& pr : q.relators) {
    const std::size_t before = exponent(spec.parent().relator(pr.source));
    if (pr.word.empty()) {
      out.violations.push_back({pr.source, before, 0, true});
      continue;
    }
    const std::size_t after = exponent(pr.word);
    if (after != before) out.violations.push_back({pr.source, before, after, false});
  }
  out.verdict = out.violations.empty();
  return out;
}

NoDuplicatesResult check_no_duplicates(const SubcomplexSpec& spec) {
  const auto q = quotient(spec);
  const Presentation& parent = spec.parent();
  NoDuplicatesResult out;
  for (std::size_t i = 0; i < q.relators.size(); ++i) {
    for (std::size_t j = i + 1; j < q.relators.size(); ++j) {
      const auto& a = q.relators[i];
      const auto& b = q.relators[j];
      const Word& ra = parent.relator(a.source);
      const Word& rb = parent.relator(b.source);
      if (cyclically_equal(a.word, b.word) && !cyclically_equal(ra, rb))
        out.collisions.emplace_back(a.source, b.source);
      if (cyclically_equal(a.word, b.word.inverse()) && !cyclically_equal(ra, rb.inverse()))
        out.inverse_collisions.emplace_back(a.source, b.source);
    }
  }
  out.verdict = out.collisions.empty();
  return out;
}

bool cancellable_alignment(const Presentation& p, const TwoCellDiagram& d) {
  if (d.r1 >= p.size() || d.r2 >= p.size()) throw Error("two-cell diagram relator out of range");
  const Word& w1 = p.relator(d.r1);
  const Word& w2 = p.relator(d.r2);
  if (d.rot1 >= w1.size() || d.rot2 >= w2.size()) throw Error("two-cell diagram rotation out of range");
  if (!(w1[d.rot1] == d.shared_edge) || !(w2[d.rot2] == d.shared_edge))
    throw Error("two-cell diagram rotation does not start with the shared edge");
  if (w1.size() != w2.size()) return false;
  for (std::size_t k = 0; k < w1.size(); ++k)
    if (!(w1.cyclic_at(d.rot1 + k) == w2.cyclic_at(d.rot2 + k))) return false;
  return true;
}

std::optional<LiftCounterexample> liftability_counterexample_search(const SubcomplexSpec& spec) {
  const auto q = quotient(spec);
  const Presentation& parent = spec.parent();

  struct Cell {
    std::size_t source;
    const Word* projected;
    std::vector<std::size_t> preimage;  // quotient offset -> parent offset
  };
  std::vector<Cell> cells;
  for (const auto& pr : q.relators) {
    if (pr.word.empty()) continue;
    Cell c{pr.source, &pr.word, {}};
    const Word& w = parent.relator(pr.source);
    for (std::size_t o = 0; o < w.size(); ++o)
      if (!spec.has_generator(w[o].gen)) c.preimage.push_back(o);
    cells.push_back(std::move(c));
  }

  for (std::size_t a = 0; a < cells.size(); ++a) {
    for (std::size_t b = a; b < cells.size(); ++b) {
      const Word& pa = *cells[a].projected;
      const Word& pb = *cells[b].projected;
      if (pa.size() != pb.size()) continue;
      const std::size_t m = pa.size();
      // rot(pa, q1) == rot(pb, q2) iff pa == rot(pb, q2 - q1).
      for (std::size_t shift = 0; shift < m; ++shift) {
        std::size_t k = 0;
        while (k < m && pa[k] == pb.cyclic_at(shift + k)) ++k;
        if (k != m) continue;
        for (std::size_t q1 = 0; q1 < m; ++q1) {
          const std::size_t q2 = (q1 + shift) % m;
          TwoCellDiagram lifted{cells[a].source, cells[b].source, parent.relator(cells[a].source)[cells[a].preimage[q1]],
                                cells[a].preimage[q1], cells[b].preimage[q2]};
          if (!cancellable_alignment(parent, lifted))
            return LiftCounterexample{TwoCellDiagram{cells[a].source, cells[b].source, pa[q1], q1, q2}, lifted};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace hnnembed
