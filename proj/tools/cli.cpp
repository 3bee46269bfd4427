#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hnnembed/dehn.hpp"
#include "hnnembed/error.hpp"
#include "hnnembed/hnn_embed.hpp"
#include "hnnembed/json_io.hpp"
#include "hnnembed/stallings.hpp"
#include "hnnembed/subquotient.hpp"
#include "hnnembed/syntax.hpp"

namespace hnnembed::cli {

namespace {

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Presentation load_presentation(const std::string& path) {
  const PresentationFile f = read_presentation_file(path);
  return Presentation(f.alphabet, f.relators, f.labels);
}

PartialAscHNN load_hnn(const std::string& path) {
  try {
    return hnn_from_file(read_presentation_file(path));
  } catch (const ParseError& e) {
    if (e.line() != 0) throw;
    throw ParseError(path + ": " + e.message());
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write " + path);
  f << text;
  if (!f) throw Error("cannot write " + path);
}

Ratio parse_ratio(const std::string& s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return {std::stoull(s), 1};
    Ratio r{std::stoull(s.substr(0, slash)), std::stoull(s.substr(slash + 1))};
    if (r.den == 0) throw Error("zero denominator");
    return r;
  } catch (const std::logic_error&) {
    throw Error("malformed ratio '" + s + "'");
  }
}

std::vector<std::uint32_t> kill_set(const Alphabet& a, const std::vector<std::string>& names) {
  std::vector<std::uint32_t> out;
  for (const auto& n : names) out.push_back(a.index_of(n));
  return out;
}

int verdict(bool ok) { return ok ? kOk : kFalse; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Embeddings of partial ascending HNN extensions of free groups"};
  app.name("hnnembed");
  app.require_subcommand(1);

  std::string file;
  bool json = false;
  bool no_inverse = false;

  auto* parse = app.add_subcommand("parse", "Parse a presentation file and print it back");
  parse->add_option("file", file, "Presentation file")->required();
  parse->add_flag("--json", json, "Print JSON instead of text");

  auto* pieces = app.add_subcommand("pieces", "Report the pieces of every relator");
  pieces->add_option("file", file, "Presentation file")->required();
  pieces->add_flag("--no-inverse-symmetrization", no_inverse, "Scan only the relators, not their inverses");

  std::size_t pbound = 7;
  std::string lambda = "1/7";
  auto* sc = app.add_subcommand("check-smallcancel", "Check C(p) and C'(lambda)");
  sc->add_option("file", file, "Presentation file")->required();
  sc->add_option("--p", pbound, "Piece bound for C(p)")->capture_default_str();
  sc->add_option("--lambda", lambda, "Ratio for C'(lambda), as num/den")->capture_default_str();
  sc->add_flag("--no-inverse-symmetrization", no_inverse, "Scan only the relators, not their inverses");

  std::vector<std::string> kill;
  auto* quot = app.add_subcommand("quotient", "Collapse the subcomplex spanned by --kill generators");
  quot->add_option("file", file, "Presentation file")->required();
  quot->add_option("--kill", kill, "Generators of Y")->required();
  quot->add_flag("--json", json, "Print JSON instead of text");

  auto* rel = app.add_subcommand("check-rel", "Check no extra powers and no duplicates relative to Y");
  rel->add_option("file", file, "Presentation file")->required();
  rel->add_option("--kill", kill, "Generators of Y")->required();

  std::string order = "first";
  std::vector<std::string> members;
  auto* fold_cmd = app.add_subcommand("fold", "Stallings core of the subgroup given by `sub:` lines");
  fold_cmd->add_option("--gens", file, "File with gens: and sub: lines")->required();
  fold_cmd->add_option("--order", order, "Fold order: first or last")
      ->check(CLI::IsMember({"first", "last"}))
      ->capture_default_str();
  fold_cmd->add_option("--member", members, "Words to test for membership");

  std::string in_path, out_path, cert_path;
  std::uint64_t seed = 0;
  bool irreducible = false;
  auto* embed = app.add_subcommand("embed", "Embed H into an ascending HNN extension G");
  embed->add_option("--in", in_path, "H presentation")->required();
  embed->add_option("--out", out_path, "Where to write G")->required();
  embed->add_option("--cert", cert_path, "Where to write the certificate")->required();
  embed->add_option("--seed", seed, "Seed for the word family")->capture_default_str();
  embed->add_flag("--irreducible", irreducible, "Also carry every reduced digram");

  auto* certify = app.add_subcommand("certify", "Recompute a certificate from H and G and compare");
  certify->add_option("--in", in_path, "H presentation")->required();
  certify->add_option("--out", out_path, "G presentation")->required();
  certify->add_option("--cert", cert_path, "Certificate to check")->required();

  std::string word;
  auto* solve = app.add_subcommand("word-solve", "Dehn's algorithm on one word");
  solve->add_option("--pres", file, "Presentation file")->required();
  solve->add_option("--word", word, "Word to reduce")->required();

  std::size_t samples = 100;
  std::size_t max_conj = 4;
  auto* iso = app.add_subcommand("isoperimetry", "Dehn-step area of random trivial words");
  iso->add_option("--pres", file, "Presentation file")->required();
  iso->add_option("--samples", samples, "Number of words")->capture_default_str();
  iso->add_option("--max-conj", max_conj, "Most conjugated relators per word")->capture_default_str();
  iso->add_option("--seed", seed, "Seed")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kError;
  }

  const PieceOptions piece_options{!no_inverse};
  try {
    if (parse->parsed()) {
      const PresentationFile f = read_presentation_file(file);
      if (json) {
        Json j = presentation_json(Presentation(f.alphabet, f.relators, f.labels));
        Json subs = Json::array();
        for (std::size_t i = 0; i < f.subgroup.size(); ++i)
          subs.push_back({{"label", f.subgroup_labels[i]}, {"word", format_word(f.subgroup[i], f.alphabet)}});
        j["subgroup"] = subs;
        if (f.hnn)
          j["hnn"] = {{"stable", f.hnn->stable}, {"ascending", f.hnn->ascending}, {"free", f.hnn->free}};
        out << dump(j);
      } else {
        out << write_presentation_file(f);
      }
      return kOk;
    }
    if (pieces->parsed()) {
      const Presentation p = load_presentation(file);
      out << dump(pieces_json(p, compute_pieces(p, piece_options)));
      return kOk;
    }
    if (sc->parsed()) {
      const Presentation p = load_presentation(file);
      const Ratio l = parse_ratio(lambda);
      if (l.num == 0 || l.num >= l.den) throw Error("--lambda must lie strictly between 0 and 1");
      if (pbound < 2) throw Error("--p must be at least 2");
      const PieceReport report = compute_pieces(p, piece_options);
      const CpResult cp = check_Cp(p, report, pbound);
      const CprimeResult cprime = check_Cprime(p, report, l.num, l.den);
      out << dump({{"C", cp_json(p, cp, pbound)}, {"Cprime", cprime_json(p, cprime, l)}});
      return verdict(cp.verdict && cprime.verdict);
    }
    if (quot->parsed()) {
      const Presentation p = load_presentation(file);
      const SubcomplexSpec spec = SubcomplexSpec::killing(p, kill_set(p.alphabet(), kill));
      const QuotientPresentation q = quotient(spec);
      if (json) {
        out << dump(quotient_json(p, q));
      } else {
        out << "gens:";
        for (const auto& n : q.alphabet.names()) out << ' ' << n;
        out << '\n';
        for (const auto& r : q.relators) {
          if (r.word.empty())
            out << "# " << p.label(r.source) << " projects to a point\n";
          else
            out << "rel " << p.label(r.source) << ": " << format_word(r.word, q.alphabet) << '\n';
        }
      }
      return kOk;
    }
    if (rel->parsed()) {
      const Presentation p = load_presentation(file);
      const SubcomplexSpec spec = SubcomplexSpec::killing(p, kill_set(p.alphabet(), kill));
      const auto powers = check_no_extra_powers(spec);
      const auto dups = check_no_duplicates(spec);
      const Json pj = no_extra_powers_json(p, powers);
      const Json dj = no_duplicates_json(p, dups);
      out << dump({{"noExtraPowers", powers.verdict},
                   {"noDuplicates", dups.verdict},
                   {"violations", pj["violations"]},
                   {"collisions", dj["collisions"]},
                   {"inverseCollisions", dj["inverseCollisions"]}});
      return verdict(powers.verdict && dups.verdict);
    }
    if (fold_cmd->parsed()) {
      const PresentationFile f = read_presentation_file(file);
      if (f.subgroup.empty()) throw Error(file + ": no sub: lines");
      std::vector<Word> gens;
      for (const Word& w : f.subgroup) {
        gens.push_back(free_reduce(w));
        if (gens.back().empty()) throw Error("subgroup generator reduces to the empty word");
      }
      const CoreGraph g = trim_to_core(fold(bouquet(gens), order == "first" ? FoldOrder::first_edge : FoldOrder::last_edge));
      Json j = graph_json(g, f.alphabet);
      Json m = Json::array();
      for (const auto& w : members) m.push_back({{"word", w}, {"member", membership(g, parse_word(w, f.alphabet))}});
      j["membership"] = m;
      out << dump(j);
      return kOk;
    }
    if (embed->parsed()) {
      const PartialAscHNN h = load_hnn(in_path);
      const ConstructionOptions options{seed, 64, 16};
      const AscHNNResult r = irreducible ? construct_irreducible_embedding(h, options) : construct_embedding(h, options);
      write_file(out_path, write_hnn_file(r.group));
      write_file(cert_path, dump(certificate_json(r.certificate, r.group)));
      out << "wrote " << out_path << " and " << cert_path << ": " << r.new_generators.size() << " new generators, "
          << r.certificate.w_sources.size() << " new relators\n";
      return verdict(r.certificate.all_true());
    }
    if (certify->parsed()) {
      const PartialAscHNN h = load_hnn(in_path);
      const PartialAscHNN g = load_hnn(out_path);
      std::ifstream f(cert_path);
      if (!f) throw Error("cannot read " + cert_path);
      Json stored;
      try {
        stored = Json::parse(f);
      } catch (const Json::parse_error& e) {
        throw ParseError(cert_path + ": " + e.what());
      }
      const EmbeddingCertificate cert =
          certify_embedding(h, g, construction_from_json(stored), irreducible_inputs_from_json(stored, g.alphabet));
      const Json fresh = certificate_json(cert, g);
      bool same = true;
      for (const auto& [key, value] : fresh.items()) {
        if (!stored.contains(key) || stored[key] != value) {
          err << "certify: field " << key << " differs from the recomputed value\n";
          same = false;
        }
      }
      for (const auto& [key, value] : stored.items()) {
        if (!fresh.contains(key)) {
          err << "certify: unexpected field " << key << "\n";
          same = false;
        }
      }
      for (const auto& name : cert.failures()) err << "certify: verdict " << name << " is false\n";
      out << (same && cert.all_true() ? "certificate verified\n" : "certificate rejected\n");
      return verdict(same && cert.all_true());
    }
    if (solve->parsed()) {
      const Presentation p = load_presentation(file);
      const Word w = parse_word(word, p.alphabet());
      const DehnResult r = dehn_solve(p, w);
      Json j = dehn_json(p, r);
      j["word"] = format_word(w, p.alphabet());
      j["area"] = r.steps.size();
      j["areaMeasure"] = "dehn-steps";
      if (r.trivial) j["replayVerified"] = replay_dehn_steps(p, w, r.steps);
      out << dump(j);
      return verdict(r.trivial);
    }
    if (iso->parsed()) {
      const Presentation p = load_presentation(file);
      Rng rng(seed);
      std::vector<Word> words;
      for (std::size_t i = 0; i < samples; ++i) words.push_back(random_trivial_word(rng, p, max_conj));
      Json j = area_json(p, area_bound_check(p, words));
      j["samples"] = samples;
      j["maxConj"] = max_conj;
      j["seed"] = seed;
      out << dump(j);
      return verdict(j["withinPieceBound"].get<bool>());
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }
  return kError;
}

}  // namespace hnnembed::cli
