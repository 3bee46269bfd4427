#include "hnnembed/dehn.hpp"

#include <algorithm>

#include "hnnembed/error.hpp"
#include "hnnembed/syntax.hpp"

namespace hnnembed {

namespace {

Word symmetrized_word(const Presentation& p, const RotationRef& ref) {
  const Word& r = p.relator(ref.relator);
  return (ref.inverted ? r.inverse() : r).rotated(ref.offset);
}

}  // namespace

DehnSolver::DehnSolver(Presentation p) : p_(std::move(p)) {
  if (!check_Cprime(p_, 1, 6).verdict) throw Error("presentation not metric small cancellation");
  for (std::size_t r = 0; r < p_.size(); ++r) {
    sources_.push_back({p_.relator(r), r, false});
    sources_.push_back({p_.relator(r).inverse(), r, true});
  }
  by_first_letter_.resize(2 * p_.alphabet().size());
  for (std::size_t s = 0; s < sources_.size(); ++s)
    for (std::size_t o = 0; o < sources_[s].word.size(); ++o)
      by_first_letter_[sources_[s].word[o].ordinal()].emplace_back(s, o);
}

// Longest match over every position of the cyclic word; ties go to the
// lowest (source, offset, position), sources ordered by relator then
// orientation.
std::optional<DehnSolver::Match> DehnSolver::best_match(const Word& cyclic) const {
  const std::size_t n = cyclic.size();
  std::optional<Match> best;
  for (std::size_t pos = 0; pos < n; ++pos) {
    for (const auto& [s, o] : by_first_letter_[cyclic[pos].ordinal()]) {
      const Word& r = sources_[s].word;
      const std::size_t m = r.size();
      const std::size_t cap = std::min(m, n);
      if (2 * cap <= m) continue;
      std::size_t k = 0;
      while (k < cap && cyclic.cyclic_at(pos + k) == r.cyclic_at(o + k)) ++k;
      if (2 * k <= m) continue;
      const Match cand{s, o, pos, k};
      auto key = [](const Match& x) {
        return std::tuple(-static_cast<std::ptrdiff_t>(x.length), x.source, x.offset, x.position);
      };
      if (!best || key(cand) < key(*best)) best = cand;
    }
  }
  return best;
}

DehnResult DehnSolver::solve(const Word& w) const {
  DehnResult result;
  Word conj;  // w = (product of recorded steps) * conj * current * conj'
  Word current = w;
  while (true) {
    const CyclicReduction cr = cyclic_reduce(current);
    conj.append(cr.conjugator);
    conj = free_reduce(conj);
    current = cr.core;
    if (current.empty()) break;
    const auto match = best_match(current);
    if (!match) break;

    const Source& src = sources_[match->source];
    const Word s = src.word.rotated(match->offset);
    const std::size_t n = current.size();
    Word rotated = current.rotated(match->position);
    conj.append(current.subword(0, match->position));
    conj = free_reduce(conj);

    // rotated = u x with s = u v; replace u by v'.
    Word next = s.subword(match->length, s.size() - match->length).inverse();
    next.append(rotated.subword(match->length, n - match->length));

    DehnStep step;
    step.conjugator = conj;
    step.relator = RotationRef{src.relator, match->offset, src.inverted};
    step.position = match->position;
    step.length = match->length;
    step.word_length_before = n;
    current = std::move(next);
    step.word_length_after = cyclic_reduce(current).core.size();
    result.steps.push_back(std::move(step));
  }
  result.trivial = current.empty();
  result.residue = current;
  return result;
}

std::size_t DehnSolver::longest_factor(const Word& w, std::size_t i) const {
  std::size_t best = 1;
  for (const auto& [s, o] : by_first_letter_[w[i].ordinal()]) {
    const Word& r = sources_[s].word;
    const std::size_t cap = std::min(r.size(), w.size() - i);
    std::size_t k = 0;
    while (k < cap && w[i + k] == r.cyclic_at(o + k)) ++k;
    best = std::max(best, k);
  }
  return best;
}

std::size_t DehnSolver::piece_count(const Word& w) const {
  const Word reduced = free_reduce(w);
  std::size_t count = 0;
  for (std::size_t i = 0; i < reduced.size(); i += longest_factor(reduced, i)) ++count;
  return count;
}

DehnResult dehn_solve(const Presentation& p, const Word& w) { return DehnSolver(p).solve(w); }

bool replay_dehn_steps(const Presentation& p, const Word& w, const std::vector<DehnStep>& steps) {
  Word product;
  for (const DehnStep& step : steps) {
    if (step.relator.relator >= p.size() || step.relator.offset >= p.relator(step.relator.relator).size())
      return false;
    product.append(step.conjugator);
    product.append(symmetrized_word(p, step.relator));
    product.append(step.conjugator.inverse());
  }
  return free_reduce(w * product.inverse()).empty();
}

AreaReport area_bound_check(const Presentation& p, const std::vector<Word>& samples) {
  const DehnSolver solver(p);
  AreaReport report;
  for (const Word& w : samples) {
    const DehnResult r = solver.solve(w);
    if (!r.trivial) throw Error("sample is not trivial: " + format_word(w, p.alphabet()));
    AreaSample row;
    row.word = w;
    row.length = free_reduce(w).size();
    row.area = r.steps.size();
    row.ratio = row.length == 0 ? Ratio{0, 1} : Ratio{row.area, row.length}.reduced();
    row.pieces = solver.piece_count(w);
    if (report.max_k < row.ratio) report.max_k = row.ratio;
    report.within_piece_bound = report.within_piece_bound && row.area <= row.pieces;
    report.table.push_back(std::move(row));
  }
  return report;
}

Word random_trivial_word(Rng& rng, const Presentation& p, std::size_t max_conjugates,
                         std::size_t max_conjugator_length) {
  if (p.size() == 0) throw Error("no relators to conjugate");
  if (max_conjugates == 0) throw Error("need at least one conjugated relator");
  std::vector<Letter> letters;
  for (std::uint32_t g = 0; g < p.alphabet().size(); ++g) {
    letters.push_back(gen(g));
    letters.push_back(inv(g));
  }
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Word product;
    const std::size_t k = 1 + draw_below(rng, max_conjugates);
    for (std::size_t i = 0; i < k; ++i) {
      const Word c = random_reduced_word(rng, letters, draw_below(rng, max_conjugator_length + 1));
      const Word& r = p.relator(draw_below(rng, p.size()));
      product.append(c);
      product.append(draw_below(rng, 2) == 0 ? r : r.inverse());
      product.append(c.inverse());
    }
    product = free_reduce(product);
    if (!product.empty()) return product;
  }
  throw Error("could not draw a nonempty trivial word");
}

}  // namespace hnnembed
