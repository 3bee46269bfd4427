#include "hnnembed/presentation.hpp"

#include <algorithm>
#include <numeric>

#include "hnnembed/error.hpp"

namespace hnnembed {

Presentation::Presentation(Alphabet alphabet, std::vector<Word> relators, std::vector<std::string> labels,
                           RelatorPolicy policy)
    : alphabet_(std::move(alphabet)), relators_(std::move(relators)), labels_(std::move(labels)) {
  if (labels_.empty()) {
    for (std::size_t i = 0; i < relators_.size(); ++i) labels_.push_back("r" + std::to_string(i + 1));
  }
  if (labels_.size() != relators_.size()) throw Error("relator label count mismatch");
  for (std::size_t i = 0; i < relators_.size(); ++i) {
    const Word& r = relators_[i];
    if (r.empty()) throw Error("relator " + labels_[i] + " is empty");
    for (Letter l : r)
      if (l.gen >= alphabet_.size()) throw Error("relator " + labels_[i] + " uses a generator outside the alphabet");
    if (policy == RelatorPolicy::cyclically_reduced && !is_cyclically_reduced(r))
      throw Error("relator " + labels_[i] + " is not cyclically reduced");
  }
}

namespace {

// One orientation of one relator, read cyclically.
struct Source {
  Word word;
  std::size_t relator;
  bool inverted;
  std::size_t period;
};

std::vector<Source> make_sources(const Presentation& p, const PieceOptions& options) {
  std::vector<Source> out;
  for (std::size_t r = 0; r < p.size(); ++r) {
    const Word& w = p.relator(r);
    const std::size_t period = primitive_period(w);
    out.push_back({w, r, false, period});
    if (options.symmetrize_inverses) out.push_back({w.inverse(), r, true, period});
  }
  return out;
}

struct Position {
  std::size_t source;
  std::size_t offset;
};

std::size_t common_extension(const Source& a, std::size_t oa, const Source& b, std::size_t ob, std::size_t cap) {
  std::size_t k = 0;
  while (k < cap && a.word.cyclic_at(oa + k) == b.word.cyclic_at(ob + k)) ++k;
  return k;
}

bool same_appearance(const std::vector<Source>& src, Position x, Position y) {
  return x.source == y.source && x.offset % src[x.source].period == y.offset % src[y.source].period;
}

// Positions bucketed by their first letter.
std::vector<std::vector<Position>> bucket_positions(const std::vector<Source>& src, std::size_t alphabet_size) {
  std::vector<std::vector<Position>> buckets(2 * alphabet_size);
  for (std::size_t s = 0; s < src.size(); ++s)
    for (std::size_t o = 0; o < src[s].word.size(); ++o) buckets[src[s].word[o].ordinal()].push_back({s, o});
  return buckets;
}

}  // namespace

std::vector<SymmetrizedRotation> symmetrize(const Presentation& p, const PieceOptions& options) {
  std::vector<SymmetrizedRotation> out;
  std::size_t appearance_base = 0;
  for (const Source& s : make_sources(p, options)) {
    for (std::size_t o = 0; o < s.word.size(); ++o)
      out.push_back({s.word.rotated(o), {s.relator, o, s.inverted}, appearance_base + o % s.period});
    appearance_base += s.period;
  }
  return out;
}

PieceReport compute_pieces(const Presentation& p, const PieceOptions& options) {
  const auto src = make_sources(p, options);
  const auto buckets = bucket_positions(src, p.alphabet().size());

  PieceReport report;
  report.symmetrized = options.symmetrize_inverses;
  report.relators.resize(p.size());

  for (std::size_t s = 0; s < src.size(); ++s) {
    if (src[s].inverted) continue;
    const Source& home = src[s];
    const std::size_t n = home.word.size();
    RelatorPieces& rp = report.relators[home.relator];
    rp.longest_from.assign(n, 0);

    for (std::size_t i = 0; i < n; ++i) {
      const Position here{s, i};
      std::size_t best = 0;
      for (const Position& other : buckets[home.word[i].ordinal()]) {
        if (same_appearance(src, here, other)) continue;
        const std::size_t cap = std::min(n, src[other.source].word.size());
        if (cap <= best) continue;
        best = std::max(best, common_extension(home, i, src[other.source], other.offset, cap));
        if (best == n) break;
      }
      rp.longest_from[i] = best;
    }

    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t len = rp.longest_from[i];
      if (len == 0) continue;
      const std::size_t prev = rp.longest_from[(i + n - 1) % n];
      if (n > 1 && prev >= len + 1) continue;  // contained in the piece starting one earlier
      Piece piece;
      piece.word = home.word.cyclic_subword(i, len);
      piece.offset = i;
      for (const Position& other : buckets[home.word[i].ordinal()]) {
        const Source& os = src[other.source];
        if (os.word.size() < len) continue;
        if (common_extension(home, i, os, other.offset, len) == len)
          piece.occurrences.push_back({os.relator, other.offset, os.inverted});
      }
      std::sort(piece.occurrences.begin(), piece.occurrences.end());
      rp.max_piece = std::max(rp.max_piece, len);
      rp.pieces.push_back(std::move(piece));
    }

    for (std::size_t start = 0; start < n; ++start) {
      if (auto d = greedy_decomposition(rp, n, start)) {
        if (!rp.min_decomposition || d->size() < *rp.min_decomposition) rp.min_decomposition = d->size();
      }
    }
  }
  return report;
}

std::optional<std::vector<std::size_t>> greedy_decomposition(const RelatorPieces& pieces, std::size_t relator_length,
                                                             std::size_t start) {
  std::vector<std::size_t> lengths;
  std::size_t covered = 0;
  while (covered < relator_length) {
    const std::size_t at = (start + covered) % relator_length;
    const std::size_t step = std::min(pieces.longest_from[at], relator_length - covered);
    if (step == 0) return std::nullopt;
    lengths.push_back(step);
    covered += step;
  }
  return lengths;
}

CpResult check_Cp(const Presentation& p, std::size_t pbound, const PieceOptions& options) {
  return check_Cp(p, compute_pieces(p, options), pbound);
}

CpResult check_Cp(const Presentation& p, const PieceReport& report, std::size_t pbound) {
  if (pbound < 2) throw Error("C(p) needs p >= 2");
  CpResult out;
  for (std::size_t r = 0; r < p.size(); ++r) {
    const auto& rp = report.relators.at(r);
    if (!rp.min_decomposition || *rp.min_decomposition >= pbound) continue;
    const Word& w = p.relator(r);
    for (std::size_t start = 0; start < w.size(); ++start) {
      auto d = greedy_decomposition(rp, w.size(), start);
      if (!d || d->size() != *rp.min_decomposition) continue;
      CpWitness witness{r, start, {}};
      std::size_t at = start;
      for (std::size_t len : *d) {
        witness.decomposition.push_back(w.cyclic_subword(at % w.size(), len));
        at += len;
      }
      out.witnesses.push_back(std::move(witness));
      break;
    }
  }
  out.verdict = out.witnesses.empty();
  return out;
}

Ratio Ratio::reduced() const {
  if (num == 0) return {0, 1};
  const auto g = std::gcd(num, den);
  return {num / g, den / g};
}

CprimeResult check_Cprime(const Presentation& p, std::uint64_t num, std::uint64_t den, const PieceOptions& options) {
  return check_Cprime(p, compute_pieces(p, options), num, den);
}

CprimeResult check_Cprime(const Presentation& p, const PieceReport& report, std::uint64_t num, std::uint64_t den) {
  if (num == 0 || num >= den) throw Error("C'(lambda) needs 0 < num < den");
  CprimeResult out;
  for (std::size_t r = 0; r < p.size(); ++r) {
    const auto& rp = report.relators.at(r);
    const std::uint64_t len = p.relator(r).size();
    if (static_cast<std::uint64_t>(rp.max_piece) * den >= num * len) out.verdict = false;
    Ratio ratio{rp.max_piece, len};
    if (!out.worst || out.worst->ratio < ratio) {
      Word piece;
      for (const auto& pc : rp.pieces)
        if (pc.word.size() == rp.max_piece) {
          piece = pc.word;
          break;
        }
      out.worst = CprimeWorst{r, std::move(piece), ratio};
    }
  }
  if (out.worst) out.worst->ratio = out.worst->ratio.reduced();
  return out;
}

bool is_proper_power(const Word& w) {
  if (w.empty()) throw Error("proper-power test on empty word");
  return exponent(w) >= 2;
}

}  // namespace hnnembed
