#include "hnnembed/hnn_embed.hpp"

#include <algorithm>
#include <sstream>

#include "hnnembed/error.hpp"
#include "hnnembed/stallings.hpp"
#include "hnnembed/w_family.hpp"

namespace hnnembed {

const Word& PartialAscHNN::image_of(std::uint32_t g) const {
  for (std::size_t i = 0; i < ascending.size(); ++i)
    if (ascending[i] == g) return images.at(i);
  throw Error("generator '" + alphabet.name(g) + "' is not ascending");
}

std::vector<std::string> validate(const PartialAscHNN& h) {
  std::vector<std::string> out;
  if (h.stable >= h.alphabet.size()) {
    out.push_back("stable letter out of range");
    return out;
  }
  const std::string& t = h.alphabet.name(h.stable);
  std::vector<int> role(h.alphabet.size(), 0);
  for (auto g : h.ascending) {
    if (g >= role.size()) {
      out.push_back("ascending generator out of range");
      continue;
    }
    ++role[g];
  }
  for (auto g : h.free) {
    if (g >= role.size()) {
      out.push_back("free generator out of range");
      continue;
    }
    ++role[g];
  }
  for (std::uint32_t g = 0; g < h.alphabet.size(); ++g) {
    const std::string& name = h.alphabet.name(g);
    if (g == h.stable) {
      if (role[g] != 0) out.push_back("stable letter " + t + " is listed as ascending or free");
    } else if (role[g] == 0) {
      out.push_back("generator " + name + " is neither ascending nor free");
    } else if (role[g] > 1) {
      out.push_back("generator " + name + " is listed more than once");
    }
  }
  if (h.ascending.empty() && h.free.empty()) out.push_back("no ascending or free generators");
  if (h.images.size() != h.ascending.size()) {
    out.push_back("image count does not match ascending generator count");
    return out;
  }
  bool images_ok = true;
  for (std::size_t i = 0; i < h.images.size(); ++i) {
    const std::string name = h.ascending[i] < h.alphabet.size() ? h.alphabet.name(h.ascending[i]) : "?";
    const Word& a = h.images[i];
    if (a.empty()) {
      out.push_back("empty image for " + name);
      images_ok = false;
      continue;
    }
    if (std::any_of(a.begin(), a.end(), [&](Letter l) { return l.gen >= h.alphabet.size(); })) {
      out.push_back("image of " + name + " uses an unknown generator");
      images_ok = false;
      continue;
    }
    if (std::any_of(a.begin(), a.end(), [&](Letter l) { return l.gen == h.stable; })) {
      out.push_back("image of " + name + " uses the stable letter " + t);
      images_ok = false;
    }
    if (!is_reduced(a)) {
      out.push_back("unreduced image for " + name);
      images_ok = false;
    }
  }
  if (images_ok && out.empty() && !h.images.empty() && !is_monomorphism(h.images))
    out.push_back("images of the ascending generators do not freely generate (map is not injective)");
  return out;
}

PartialAscHNN hnn_from_file(const PresentationFile& file) {
  if (!file.hnn) throw ParseError("missing 'hnn:' header");
  const Alphabet& alpha = file.alphabet;
  auto lookup = [&](const std::string& name) {
    auto g = alpha.find(name);
    if (!g) throw ParseError("hnn header names unknown generator '" + name + "'");
    return *g;
  };
  PartialAscHNN h;
  h.alphabet = alpha;
  h.stable = lookup(file.hnn->stable);
  for (const auto& n : file.hnn->ascending) h.ascending.push_back(lookup(n));
  for (const auto& n : file.hnn->free) h.free.push_back(lookup(n));

  std::vector<std::optional<Word>> images(h.ascending.size());
  for (std::size_t r = 0; r < file.relators.size(); ++r) {
    const Word& w = file.relators[r];
    const std::string& label = file.labels[r];
    const Letter t = gen(h.stable);
    if (w.size() < 3 || !(w[0] == t) || w[1].sign < 0 || !(w[2] == t.inverse()))
      throw ParseError("relator " + label + " is not of the form t g t' A'");
    Word rest = w.subword(3, w.size() - 3);
    if (std::any_of(rest.begin(), rest.end(), [&](Letter l) { return l.gen == h.stable; }))
      throw ParseError("relator " + label + " uses the stable letter inside the image");
    auto it = std::find(h.ascending.begin(), h.ascending.end(), w[1].gen);
    if (it == h.ascending.end())
      throw ParseError("relator " + label + " conjugates non-ascending generator '" + alpha.name(w[1].gen) + "'");
    auto& slot = images[static_cast<std::size_t>(it - h.ascending.begin())];
    if (slot) throw ParseError("generator '" + alpha.name(w[1].gen) + "' has two relators");
    slot = rest.inverse();
  }
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (!images[i]) throw ParseError("ascending generator '" + alpha.name(h.ascending[i]) + "' has no relator");
    h.images.push_back(*images[i]);
  }
  return h;
}

std::string write_hnn_file(const PartialAscHNN& h) {
  std::ostringstream out;
  out << "gens:";
  for (const auto& n : h.alphabet.names()) out << ' ' << n;
  out << "\nhnn: " << h.alphabet.name(h.stable) << "; ascending:";
  for (auto g : h.ascending) out << ' ' << h.alphabet.name(g);
  out << "; free:";
  for (auto g : h.free) out << ' ' << h.alphabet.name(g);
  out << '\n';
  const std::string& t = h.alphabet.name(h.stable);
  for (std::size_t i = 0; i < h.ascending.size(); ++i) {
    const std::string& g = h.alphabet.name(h.ascending[i]);
    out << "rel " << g << ": " << g << '^' << t << " = " << format_word(h.images[i], h.alphabet) << '\n';
  }
  return out.str();
}

Presentation hnn_presentation(const PartialAscHNN& h) {
  std::vector<Word> relators;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < h.ascending.size(); ++i) {
    Word r{gen(h.stable), gen(h.ascending[i]), inv(h.stable)};
    r.append(h.images.at(i).inverse());
    relators.push_back(std::move(r));
    labels.push_back(h.alphabet.name(h.ascending[i]));
  }
  return Presentation(h.alphabet, std::move(relators), std::move(labels));
}

SubcomplexSpec build_X_and_Y(const PartialAscHNN& h, const PartialAscHNN& g_ext) {
  std::vector<std::uint32_t> y_gens;
  for (const auto& name : h.alphabet.names()) y_gens.push_back(g_ext.alphabet.index_of(name));
  std::vector<std::size_t> y_rels;
  for (std::size_t r = 0; r < g_ext.ascending.size(); ++r) {
    const std::string& name = g_ext.alphabet.name(g_ext.ascending[r]);
    auto hg = h.alphabet.find(name);
    if (hg && std::find(h.ascending.begin(), h.ascending.end(), *hg) != h.ascending.end()) y_rels.push_back(r);
  }
  return SubcomplexSpec(hnn_presentation(g_ext), std::move(y_gens), std::move(y_rels));
}

namespace {

void require_valid(const PartialAscHNN& h) {
  auto problems = validate(h);
  if (problems.empty()) return;
  std::string msg = "invalid partial ascending HNN extension:";
  for (const auto& p : problems) msg += "\n  " + p;
  throw Error(msg);
}

std::string fresh_name(const Alphabet& alphabet, std::vector<std::string>& taken, std::string base) {
  while (alphabet.find(base) || std::find(taken.begin(), taken.end(), base) != taken.end()) base += '_';
  taken.push_back(base);
  return base;
}

// G's alphabet: H's generators in order, then two fresh generators.
std::pair<Alphabet, std::vector<std::uint32_t>> extend_alphabet(const Alphabet& h) {
  std::vector<std::string> taken;
  std::vector<std::string> names = h.names();
  names.push_back(fresh_name(h, taken, "c1"));
  names.push_back(fresh_name(h, taken, "c2"));
  const auto n = static_cast<std::uint32_t>(names.size());
  return {Alphabet(std::move(names)), {n - 2, n - 1}};
}

PartialAscHNN extended_group(const PartialAscHNN& h, Alphabet alphabet, const std::vector<std::uint32_t>& c,
                             const std::vector<Word>& b_images, const std::vector<Word>& c_images) {
  PartialAscHNN g;
  g.alphabet = std::move(alphabet);
  g.stable = h.stable;
  g.ascending = h.ascending;
  g.images = h.images;
  for (std::size_t j = 0; j < h.free.size(); ++j) {
    g.ascending.push_back(h.free[j]);
    g.images.push_back(b_images.at(j));
  }
  for (std::size_t k = 0; k < c.size(); ++k) {
    g.ascending.push_back(c[k]);
    g.images.push_back(c_images.at(k));
  }
  return g;
}

void require_certified(const EmbeddingCertificate& cert) {
  auto failed = cert.failures();
  if (failed.empty()) return;
  std::string msg = "embedding certificate failed:";
  for (const auto& f : failed) msg += ' ' + f;
  throw Error(msg);
}

// The rotation of w or w' that starts with `first`, lowest offset first.
Word rotation_starting_with(const Word& w, Letter first) {
  for (const Word& base : {w, w.inverse()})
    for (std::size_t o = 0; o < base.size(); ++o)
      if (base[o] == first) return base.rotated(o);
  throw Error("word does not contain the required letter");
}

// The closed Eulerian walk `circuit` (first letter == last letter) re-read
// from its first vertex not in `forbidden`.
Word rotate_circuit(const Word& circuit, const std::vector<Letter>& forbidden) {
  const std::size_t m = circuit.size() - 1;
  for (std::size_t s = 0; s < m; ++s) {
    if (std::find(forbidden.begin(), forbidden.end(), circuit[s]) != forbidden.end()) continue;
    Word out = circuit.subword(s, m - s);
    out.append(circuit.subword(0, s + 1));
    return out;
  }
  throw Error("no admissible rotation of the digram word");
}

}  // namespace

AscHNNResult construct_embedding(const PartialAscHNN& h, const ConstructionOptions& options) {
  require_valid(h);
  auto [alphabet, c] = extend_alphabet(h.alphabet);

  const std::size_t free_count = h.free.size();
  const auto family = generate_w_family(free_count + 2, alphabet, c[0], c[1],
                                        {options.seed, options.initial_length, options.max_escalations});

  std::vector<Word> b_images(family.words.begin(), family.words.begin() + static_cast<std::ptrdiff_t>(free_count));
  // The W word of the c_k cell is c_k' C_k; rotate (or invert) the generated
  // word so that it starts with c_k' and drop that letter.
  std::vector<Word> c_images;
  for (std::size_t k = 0; k < 2; ++k) {
    const Word v = rotation_starting_with(family.words[free_count + k], inv(c[k]));
    c_images.push_back(v.subword(1, v.size() - 1));
  }

  AscHNNResult result;
  result.group = extended_group(h, alphabet, c, b_images, c_images);
  result.new_generators = c;
  result.escalations = family.escalations;
  result.certificate = certify_embedding(h, result.group, Construction::ascending);
  require_certified(result.certificate);
  return result;
}

AscHNNResult construct_irreducible_embedding(const PartialAscHNN& h, const ConstructionOptions& options) {
  require_valid(h);
  if (h.free.empty()) throw Error("no free part: the irreducible construction requires at least one free generator");
  auto [alphabet, c] = extend_alphabet(h.alphabet);
  const std::size_t free_count = h.free.size();

  // Core of <A_i> and 2|J| labels unused at its basepoint.
  const CoreGraph core = subgroup_core(h.images);
  std::vector<Letter> labels;
  for (Letter l : unused_basepoint_labels(core, h.alphabet))
    if (l.gen != h.stable && labels.size() < 2 * free_count) labels.push_back(l);
  if (labels.size() < 2 * free_count) throw Error("degree bound violated");

  // Digram word over every non-stable generator of G.
  std::vector<std::string> digram_names;
  std::vector<std::uint32_t> digram_gen;
  for (std::uint32_t g = 0; g < alphabet.size(); ++g) {
    if (g == h.stable) continue;
    digram_names.push_back(alphabet.name(g));
    digram_gen.push_back(g);
  }
  Word circuit;
  for (Letter l : eulerian_digram_word(Alphabet(digram_names))) circuit.push_back(Letter{digram_gen[l.gen], l.sign});

  IrreducibleInputs inputs;
  inputs.chosen_labels = labels;
  for (std::size_t j = 0; j < free_count; ++j)
    inputs.u_words.push_back(rotate_circuit(circuit, {labels[j + free_count].inverse(), labels[j].inverse()}));
  for (std::size_t k = 0; k < 2; ++k) inputs.v_words.push_back(rotate_circuit(circuit, {inv(c[k])}));

  const std::vector<std::uint32_t> c_gens = c;
  const auto c_letters = signed_letters(c_gens);
  auto rho = [&](const Word& w) {
    Word out;
    for (Letter l : w)
      if (l.gen == c[0] || l.gen == c[1]) out.push_back(l);
    return out;
  };

  std::size_t length = options.initial_length;
  std::vector<std::string> last_failures;
  for (std::size_t escalation = 0; escalation <= options.max_escalations; ++escalation, length *= 2) {
    Rng rng(options.seed * 0x9E3779B97F4A7C15ull + 0x5851F42D4C957F2Dull + escalation);
    std::vector<Word> b_images;
    std::vector<Word> c_images;
    std::vector<Word> w_words;
    for (std::size_t j = 0; j < free_count; ++j) {
      const Word& u = inputs.u_words[j];
      const Word beta = random_reduced_word(rng, c_letters, length, {{u.back().inverse()}, {}, false});
      Word b{labels[j + free_count]};
      b.append(u);
      b.append(beta);
      b.push_back(labels[j].inverse());
      w_words.push_back(cyclic_reduce(rho(b)).core);
      b_images.push_back(std::move(b));
    }
    for (std::size_t k = 0; k < 2; ++k) {
      const Word& v = inputs.v_words[k];
      const Word gamma = random_reduced_word(rng, c_letters, length, {{v.back().inverse()}, {inv(c[k])}, false});
      Word cw{gen(c[k])};
      cw.append(v);
      cw.append(gamma);
      cw.push_back(gen(c[k]));
      Word shifted{inv(c[k])};
      shifted.append(cw);
      w_words.push_back(cyclic_reduce(rho(shifted)).core);
      c_images.push_back(std::move(cw));
    }

    const bool images_reduced =
        std::all_of(b_images.begin(), b_images.end(), [](const Word& w) { return is_cyclically_reduced(w); }) &&
        std::all_of(c_images.begin(), c_images.end(), [](const Word& w) { return is_cyclically_reduced(w); });
    if (!images_reduced || !w_family_acceptable(alphabet, w_words)) {
      last_failures = {"gate"};
      continue;
    }

    AscHNNResult result;
    result.group = extended_group(h, alphabet, c, b_images, c_images);
    result.new_generators = c;
    result.escalations = escalation;
    result.certificate = certify_embedding(h, result.group, Construction::irreducible, inputs);
    last_failures = result.certificate.failures();
    if (last_failures.empty()) return result;
  }
  std::string msg = "generator exhausted; last failing verdicts:";
  for (const auto& f : last_failures) msg += ' ' + f;
  throw Error(msg);
}

}  // namespace hnnembed
