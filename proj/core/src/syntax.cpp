#include "hnnembed/syntax.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "hnnembed/error.hpp"

namespace hnnembed {
namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

// Recursive-descent reader over one line fragment. Columns are reported
// relative to `base_column`.
class WordReader {
 public:
  WordReader(std::string_view text, const Alphabet& alphabet, std::size_t line, std::size_t base_column)
      : text_(text), alphabet_(alphabet), line_(line), base_(base_column) {}

  Word read_all() {
    Word w = read_sequence();
    skip_space();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return w;
  }

 private:
  Word read_sequence() {
    Word out;
    for (;;) {
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] == ')') return out;
      out.append(read_term());
    }
  }

  Word read_term() {
    Word atom = read_atom();
    for (;;) {
      skip_space();
      if (pos_ >= text_.size()) return atom;
      if (text_[pos_] == '\'') {
        ++pos_;
        atom = atom.inverse();
      } else if (text_[pos_] == '^') {
        ++pos_;
        skip_space();
        if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          const std::size_t start = pos_;
          std::size_t k = 0;
          while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            k = k * 10 + static_cast<std::size_t>(text_[pos_] - '0');
            if (k > 1'000'000) fail_at(start, "exponent too large");
            ++pos_;
          }
          if (k == 0) fail_at(start, "exponent must be at least 1");
          atom = atom.power(k);
        } else if (pos_ < text_.size() && ident_start(text_[pos_])) {
          Letter x = read_generator();
          Word conj{x};
          conj.append(atom);
          conj.push_back(x.inverse());
          atom = std::move(conj);
        } else {
          fail("expected exponent or generator after '^'");
        }
      } else {
        return atom;
      }
    }
  }

  Word read_atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("expected generator or '('");
    if (text_[pos_] == '(') {
      const std::size_t open = pos_++;
      Word inner = read_sequence();
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] != ')') fail_at(open, "unbalanced '('");
      ++pos_;
      return inner;
    }
    if (ident_start(text_[pos_])) return Word{read_generator()};
    fail("unexpected '" + std::string(1, text_[pos_]) + "'");
  }

  Letter read_generator() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
    std::string_view name = text_.substr(start, pos_ - start);
    auto g = alphabet_.find(name);
    if (!g) fail_at(start, "unknown generator '" + std::string(name) + "'");
    return gen(*g);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) const { fail_at(pos_, msg); }
  [[noreturn]] void fail_at(std::size_t at, const std::string& msg) const {
    throw ParseError(msg, line_, base_ + at);
  }

  std::string_view text_;
  const Alphabet& alphabet_;
  std::size_t line_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string> split_names(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

struct LineCursor {
  std::size_t line;
  std::string_view text;  // full line, comment stripped
};

[[noreturn]] void fail_line(const LineCursor& c, std::string_view at, const std::string& msg) {
  const std::size_t col = at.data() >= c.text.data() ? static_cast<std::size_t>(at.data() - c.text.data()) + 1 : 1;
  throw ParseError(msg, c.line, col);
}

std::size_t column_of(const LineCursor& c, std::string_view part) {
  return static_cast<std::size_t>(part.data() - c.text.data()) + 1;
}

HnnHeader parse_hnn_header(const LineCursor& c, std::string_view body) {
  HnnHeader h;
  std::size_t start = 0;
  bool first = true;
  while (start <= body.size()) {
    std::size_t semi = body.find(';', start);
    std::string_view clause = body.substr(start, semi == std::string_view::npos ? std::string_view::npos : semi - start);
    std::string_view t = trim(clause);
    if (first) {
      auto names = split_names(t);
      if (names.size() != 1) fail_line(c, t, "hnn header needs exactly one stable letter");
      h.stable = names.front();
      first = false;
    } else if (!t.empty()) {
      auto colon = t.find(':');
      if (colon == std::string_view::npos) fail_line(c, t, "expected 'ascending:' or 'free:'");
      std::string_view key = trim(t.substr(0, colon));
      auto names = split_names(t.substr(colon + 1));
      if (key == "ascending")
        h.ascending = std::move(names);
      else if (key == "free")
        h.free = std::move(names);
      else
        fail_line(c, key, "unknown hnn clause '" + std::string(key) + "'");
    }
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  return h;
}

}  // namespace

Word parse_word(std::string_view text, const Alphabet& alphabet) {
  return WordReader(text, alphabet, 0, 1).read_all();
}

std::string format_word(const Word& w, const Alphabet& alphabet) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += alphabet.name(w[i].gen);
    if (w[i].sign < 0) out += '\'';
  }
  return out;
}

PresentationFile parse_presentation_file(std::string_view text) {
  PresentationFile file;
  bool have_gens = false;
  std::set<std::string> labels;
  std::set<std::string> sub_labels;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    ++line_no;
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;

    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    LineCursor cur{line_no, raw};
    std::string_view line = trim(raw);
    if (line.empty()) continue;

    auto colon = line.find(':');
    if (colon == std::string_view::npos) fail_line(cur, line, "expected 'keyword:'");
    std::string_view head = trim(line.substr(0, colon));
    std::string_view body = line.substr(colon + 1);
    auto head_words = split_names(head);
    const std::string keyword = head_words.empty() ? std::string() : head_words.front();

    if (keyword == "gens") {
      if (have_gens) fail_line(cur, head, "duplicate 'gens:' line");
      if (head_words.size() != 1) fail_line(cur, head, "'gens' takes no name");
      try {
        file.alphabet = Alphabet(split_names(body));
      } catch (const Error& e) {
        fail_line(cur, body, e.what());
      }
      have_gens = true;
    } else if (keyword == "hnn") {
      if (file.hnn) fail_line(cur, head, "duplicate 'hnn:' line");
      file.hnn = parse_hnn_header(cur, body);
    } else if (keyword == "rel" || keyword == "sub") {
      if (!have_gens) fail_line(cur, head, "'gens:' must come before '" + keyword + ":'");
      if (head_words.size() > 2) fail_line(cur, head, "expected '" + keyword + " [name]:'");
      const bool is_rel = keyword == "rel";
      auto& words = is_rel ? file.relators : file.subgroup;
      auto& names = is_rel ? file.labels : file.subgroup_labels;
      auto& used = is_rel ? labels : sub_labels;
      std::string label = head_words.size() == 2 ? head_words[1]
                                                 : (is_rel ? "r" : "h") + std::to_string(words.size() + 1);
      if (!used.insert(label).second) fail_line(cur, head, "duplicate label '" + label + "'");

      auto eq = body.find('=');
      std::string_view lhs_text = eq == std::string_view::npos ? body : body.substr(0, eq);
      Word w = WordReader(lhs_text, file.alphabet, line_no, column_of(cur, lhs_text)).read_all();
      if (eq != std::string_view::npos) {
        std::string_view rhs_text = body.substr(eq + 1);
        if (rhs_text.find('=') != std::string_view::npos) fail_line(cur, rhs_text, "more than one '='");
        w.append(WordReader(rhs_text, file.alphabet, line_no, column_of(cur, rhs_text)).read_all().inverse());
      }
      if (is_rel) {
        if (w.empty()) fail_line(cur, body, "relator is empty");
        if (!is_cyclically_reduced(w)) fail_line(cur, body, "relator is not cyclically reduced");
      }
      words.push_back(std::move(w));
      names.push_back(std::move(label));
    } else {
      fail_line(cur, head, "unknown keyword '" + std::string(head) + "'");
    }
  }
  if (!have_gens) throw ParseError("missing 'gens:' line", 1, 1);
  return file;
}

PresentationFile read_presentation_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_presentation_file(ss.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ":" + e.what());
  }
}

std::string write_presentation_file(const PresentationFile& file) {
  std::ostringstream out;
  out << "gens:";
  for (const auto& n : file.alphabet.names()) out << ' ' << n;
  out << '\n';
  if (file.hnn) {
    out << "hnn: " << file.hnn->stable << "; ascending:";
    for (const auto& n : file.hnn->ascending) out << ' ' << n;
    out << "; free:";
    for (const auto& n : file.hnn->free) out << ' ' << n;
    out << '\n';
  }
  for (std::size_t i = 0; i < file.relators.size(); ++i)
    out << "rel " << file.labels.at(i) << ": " << format_word(file.relators[i], file.alphabet) << '\n';
  for (std::size_t i = 0; i < file.subgroup.size(); ++i)
    out << "sub " << file.subgroup_labels.at(i) << ": " << format_word(file.subgroup[i], file.alphabet) << '\n';
  return out.str();
}

}  // namespace hnnembed
