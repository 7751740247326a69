#include "tc/presentation_io.hpp"

#include <fstream>
#include <sstream>

namespace tc {

namespace {

[[noreturn]] void fail(const std::string& label, int line,
                       const std::string& what) {
  throw PresentationError(label + ":" + std::to_string(line) + ": " + what);
}

mpq_class parse_rational(const std::string& text, const std::string& label,
                         int line) {
  try {
    mpq_class q(text);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    fail(label, line, "bad coefficient '" + text + "'");
  }
}

// A term is either `<coeff>*<name>` (split at the first '*', so names may
// themselves contain '*', as tensor-product basis names do) or a bare name.
std::pair<mpq_class, std::string> parse_term(const std::string& token,
                                             const std::string& label,
                                             int line) {
  const auto star = token.find('*');
  const bool looks_numeric =
      star != std::string::npos && star > 0 &&
      token.find_first_not_of("+-0123456789/", 0) >= star;
  if (looks_numeric) {
    if (star + 1 == token.size())
      fail(label, line, "bad term '" + token + "': missing basis name");
    return {parse_rational(token.substr(0, star), label, line),
            token.substr(star + 1)};
  }
  return {mpq_class(1), token};
}

}  // namespace

Presentation parse_presentation(std::istream& in, const std::string& label) {
  Presentation p;
  bool have_field = false;
  std::map<std::string, int> index;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::istringstream ls(raw);
    std::string word;
    if (!(ls >> word) || word[0] == '#') continue;
    if (word == "field") {
      if (have_field) fail(label, line, "duplicate field line");
      std::string kind;
      if (!(ls >> kind)) fail(label, line, "field line needs Q or F <p>");
      if (kind == "Q") {
        p.field = Field::rationals();
      } else if (kind == "F") {
        long ch = 0;
        if (!(ls >> ch) || ch < 2 || !is_prime(static_cast<unsigned>(ch)))
          fail(label, line, "field F needs a prime characteristic");
        p.field = Field::prime(static_cast<unsigned>(ch));
      } else {
        fail(label, line, "unknown field '" + kind + "'");
      }
      have_field = true;
      continue;
    }
    if (!have_field) fail(label, line, "the field line must come first");
    if (word == "basis") {
      std::string name;
      int degree = 0;
      if (!(ls >> name >> degree))
        fail(label, line, "basis line needs a name and a degree");
      if (index.count(name)) fail(label, line, "duplicate basis name " + name);
      index[name] = static_cast<int>(p.basis.size());
      p.basis.push_back({name, degree});
      continue;
    }
    if (word == "prod") {
      std::string a, b, eq;
      if (!(ls >> a >> b >> eq) || eq != "=")
        fail(label, line, "prod line needs '<a> <b> = <terms>'");
      const auto ia = index.find(a), ib = index.find(b);
      if (ia == index.end()) fail(label, line, "unknown basis name " + a);
      if (ib == index.end()) fail(label, line, "unknown basis name " + b);
      std::vector<std::pair<std::uint32_t, mpq_class>> terms;
      std::string token;
      mpq_class sign(1);
      bool expect_term = true;
      while (ls >> token) {
        if (token == "+" || token == "-") {
          if (expect_term) fail(label, line, "misplaced '" + token + "'");
          sign = token == "-" ? -1 : 1;
          expect_term = true;
          continue;
        }
        if (!expect_term)
          fail(label, line, "missing '+' or '-' before '" + token + "'");
        mpq_class local(1);
        std::string body = token;
        if (body.size() > 1 && body[0] == '-' && body.find('*') == std::string::npos) {
          local = -1;
          body = body.substr(1);
        }
        auto [coeff, name] = parse_term(body, label, line);
        const auto it = index.find(name);
        if (it == index.end()) fail(label, line, "unknown basis name " + name);
        terms.emplace_back(static_cast<std::uint32_t>(it->second),
                           sign * local * coeff);
        sign = 1;
        expect_term = false;
      }
      if (expect_term) fail(label, line, "prod line has no terms");
      const std::pair<int, int> key{ia->second, ib->second};
      if (p.products.count(key))
        fail(label, line, "duplicate prod line for " + a + " " + b);
      p.products[key] = sparse_from_terms(std::move(terms), p.field);
      continue;
    }
    fail(label, line, "unknown directive '" + word + "'");
  }
  if (!have_field) fail(label, line ? line : 1, "missing field line");
  if (p.basis.empty()) fail(label, line ? line : 1, "missing basis lines");
  p.label = label;
  return p;
}

Presentation parse_presentation_text(const std::string& text,
                                     const std::string& label) {
  std::istringstream in(text);
  return parse_presentation(in, label);
}

Presentation load_presentation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PresentationError("cannot open algebra file " + path);
  return parse_presentation(in, path);
}

std::string serialize_presentation(const Presentation& p) {
  std::ostringstream out;
  if (p.field.is_rational())
    out << "field Q\n";
  else
    out << "field F " << p.field.characteristic << "\n";
  for (const auto& b : p.basis)
    out << "basis " << b.name << " " << b.degree << "\n";
  for (const auto& [key, value] : p.products) {
    if (key.first > key.second || value.is_zero()) continue;
    out << "prod " << p.basis[key.first].name << " "
        << p.basis[key.second].name << " =";
    bool first = true;
    for (const auto& [k, c] : value.terms) {
      mpq_class a = c;
      if (first) {
        out << " ";
      } else if (a < 0) {
        out << " - ";
        a = -a;
      } else {
        out << " + ";
      }
      if (first && a < 0) {
        out << "-";
        a = -a;
      }
      out << a.get_str() << "*" << p.basis[k].name;
      first = false;
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace tc
