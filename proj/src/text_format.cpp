#include "matsuki/text_format.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <regex>
#include <set>
#include <sstream>

namespace matsuki {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
  std::string rest;  // text after the first token, trimmed
};

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0, pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    pos = end + 1;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    const std::string body = trim(raw);
    if (body.empty()) continue;
    Line line{number, {}, {}};
    std::istringstream in(body);
    for (std::string tok; in >> tok;) line.tokens.push_back(tok);
    const auto space = body.find_first_of(" \t");
    if (space != std::string::npos) line.rest = trim(std::string_view(body).substr(space));
    lines.push_back(std::move(line));
  }
  return lines;
}

Int parse_int(const std::string& tok, std::size_t line) {
  Int value = 0;
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  if (!tok.empty() && tok[0] == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) throw ParseError(line, "expected an integer, got '" + tok + "'");
  return value;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

RootDatumPtr builtin_datum(const std::string& name) {
  if (name == "SL2") return sl2_datum();
  if (name == "PGL2") return pgl2_datum();
  if (name == "SL3") return sl3_datum();
  if (name == "SL2xSL2") return sl2_x_sl2_datum();
  static const std::regex gl_re(R"(GL([1-9][0-9]?))");
  std::smatch m;
  if (std::regex_match(name, m, gl_re)) return gl_datum(std::stoul(m[1]));
  return nullptr;
}

std::string matrix_block(const std::string& key, const std::vector<IntVector>& rows) {
  std::ostringstream out;
  out << key << "\n";
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) out << (i ? " " : "") << r[i];
    out << "\n";
  }
  out << "end\n";
  return out.str();
}

}  // namespace

// ------------------------------------------------------------------ spec files

SpecFile parse_spec_text(std::string_view text) {
  const auto lines = tokenize(text);

  std::optional<std::string> name;
  std::optional<std::size_t> rank;
  std::optional<std::vector<IntVector>> roots, coroots;
  std::optional<std::vector<std::size_t>> simple;
  std::size_t datum_line = 0;

  struct PendingInvolution {
    std::string name;
    std::size_t line;
    std::optional<std::string> datum;
    std::optional<std::vector<IntVector>> theta;
  };
  std::vector<PendingInvolution> pending;

  auto need_args = [](const Line& l, std::size_t count) {
    if (l.tokens.size() != count + 1)
      throw ParseError(l.number, "'" + l.tokens[0] + "' takes " + std::to_string(count) + " argument(s)");
  };

  for (std::size_t idx = 0; idx < lines.size(); ++idx) {
    const Line& l = lines[idx];
    const std::string& key = l.tokens[0];

    auto read_block = [&](std::optional<std::size_t> width) {
      need_args(l, 0);
      std::vector<IntVector> rows;
      for (++idx;; ++idx) {
        if (idx == lines.size()) throw ParseError(l.number, "block '" + key + "' is missing 'end'");
        const Line& r = lines[idx];
        if (r.tokens.size() == 1 && r.tokens[0] == "end") break;
        IntVector row;
        for (const auto& tok : r.tokens) row.push_back(parse_int(tok, r.number));
        if (width && row.size() != *width)
          throw ParseError(r.number, "expected " + std::to_string(*width) + " entries, got " + std::to_string(row.size()));
        rows.push_back(std::move(row));
      }
      return rows;
    };
    auto once = [&](bool present) {
      if (present) throw ParseError(l.number, "duplicate '" + key + "'");
    };

    if (key == "name") {
      need_args(l, 1);
      once(name.has_value());
      name = l.tokens[1];
      datum_line = l.number;
    } else if (key == "rank") {
      need_args(l, 1);
      once(rank.has_value());
      const Int r = parse_int(l.tokens[1], l.number);
      if (r <= 0) throw ParseError(l.number, "rank must be positive");
      rank = static_cast<std::size_t>(r);
      if (!datum_line) datum_line = l.number;
    } else if (key == "roots" || key == "coroots") {
      if (!rank) throw ParseError(l.number, "'rank' must precede '" + key + "'");
      auto& target = key == "roots" ? roots : coroots;
      once(target.has_value());
      target = read_block(rank);
    } else if (key == "simple") {
      once(simple.has_value());
      std::vector<std::size_t> s;
      for (std::size_t i = 1; i < l.tokens.size(); ++i) {
        const Int v = parse_int(l.tokens[i], l.number);
        if (v < 0) throw ParseError(l.number, "simple root positions are non-negative");
        s.push_back(static_cast<std::size_t>(v));
      }
      simple = std::move(s);
    } else if (key == "involution") {
      need_args(l, 1);
      pending.push_back({l.tokens[1], l.number, std::nullopt, std::nullopt});
    } else if (key == "datum") {
      need_args(l, 1);
      if (pending.empty()) throw ParseError(l.number, "'datum' outside an involution block");
      once(pending.back().datum.has_value());
      pending.back().datum = l.tokens[1];
    } else if (key == "theta") {
      if (pending.empty()) throw ParseError(l.number, "'theta' outside an involution block");
      once(pending.back().theta.has_value());
      pending.back().theta = read_block(std::nullopt);
    } else if (key == "end") {
      throw ParseError(l.number, "'end' without an open block");
    } else {
      throw ParseError(l.number, "unknown key '" + key + "'");
    }
  }

  SpecFile file;
  const bool any_datum_key = name || rank || roots || coroots || simple;
  if (any_datum_key) {
    const std::size_t at = datum_line ? datum_line : 1;
    if (!name) throw ParseError(at, "root datum is missing 'name'");
    if (!rank) throw ParseError(at, "root datum is missing 'rank'");
    if (!roots) throw ParseError(at, "root datum is missing 'roots'");
    if (!coroots) throw ParseError(at, "root datum is missing 'coroots'");
    if (!simple) throw ParseError(at, "root datum is missing 'simple'");
    if (roots->size() != coroots->size())
      throw ParseError(at, std::to_string(roots->size()) + " roots but " + std::to_string(coroots->size()) + " coroots");
    for (std::size_t s : *simple)
      if (s >= roots->size()) throw ParseError(at, "simple position " + std::to_string(s) + " is out of range");
    auto [all_roots, all_coroots] = close_under_negation(std::move(*roots), std::move(*coroots));
    auto datum = std::make_shared<const RootDatum>(*name, *rank, std::move(all_roots), std::move(all_coroots),
                                                   std::move(*simple));
    const auto report = validate_root_datum(*datum);
    if (!report.ok()) throw PreconditionError("root datum " + *name + ": " + report.violations.front());
    file.datum = std::move(datum);
  }

  for (auto& p : pending) {
    if (!p.datum) throw ParseError(p.line, "involution " + p.name + " is missing 'datum'");
    if (!p.theta) throw ParseError(p.line, "involution " + p.name + " is missing 'theta'");
    RootDatumPtr datum = file.datum && file.datum->name() == *p.datum ? file.datum : builtin_datum(*p.datum);
    if (!datum) throw ParseError(p.line, "unknown datum '" + *p.datum + "'");
    const std::size_t r = datum->rank();
    if (p.theta->size() != r) throw ParseError(p.line, "theta must have " + std::to_string(r) + " rows");
    for (const auto& row : *p.theta)
      if (row.size() != r) throw ParseError(p.line, "theta must have " + std::to_string(r) + " columns");
    InvolutionSpec spec(p.name, std::move(datum), IntMatrix::from_rows(*p.theta, r));
    const auto report = validate_involution(spec);
    if (!report.ok()) throw PreconditionError("involution " + p.name + ": " + report.violations.front());
    file.involutions.push_back(std::move(spec));
  }
  return file;
}

SpecFile load_spec_file(const std::string& path) { return parse_spec_text(read_file(path)); }

std::string format_datum(const RootDatum& datum) {
  // Positive roots only; the parser restores the negatives. Simple positions
  // are re-indexed into the positive list.
  std::vector<IntVector> roots, coroots;
  std::map<std::size_t, std::size_t> position;
  for (std::size_t i : datum.positive_indices()) {
    position[i] = roots.size();
    roots.push_back(datum.roots()[i]);
    coroots.push_back(datum.coroots()[i]);
  }
  std::ostringstream out;
  out << "name " << datum.name() << "\n";
  out << "rank " << datum.rank() << "\n";
  out << matrix_block("roots", roots);
  out << matrix_block("coroots", coroots);
  out << "simple";
  for (std::size_t s : datum.simple_indices()) out << " " << position.at(s);
  out << "\n";
  return out.str();
}

std::string format_catalog_entry(const RealFormCatalogEntry& entry) {
  const InvolutionSpec& spec = entry.spec;
  std::vector<IntVector> rows;
  for (std::size_t i = 0; i < spec.theta().rows(); ++i) rows.push_back(spec.theta().row(i));
  std::ostringstream out;
  out << "# " << entry.notes << "\n";
  out << "# expected_k_connected " << (entry.expected_k_connected ? "true" : "false") << "\n";
  out << format_datum(spec.datum()) << "\n";
  out << "involution " << spec.name() << "\n";
  out << "datum " << spec.datum().name() << "\n";
  out << matrix_block("theta", rows);
  return out.str();
}

std::string describe_catalog_entry(const RealFormCatalogEntry& entry) {
  const InvolutionSpec& spec = entry.spec;
  const RootDatum& datum = spec.datum();
  std::ostringstream out;
  out << "name " << entry.name << "\n";
  out << "datum " << datum.name() << "\n";
  out << "rank " << datum.rank() << "\n";
  out << "semisimple_rank " << datum.semisimple_rank() << "\n";
  out << "theta " << entry.theta_description << " " << spec.theta().to_string() << "\n";
  out << "expected_k_connected " << (entry.expected_k_connected ? "true" : "false") << "\n";
  out << "positive_coroots";
  for (std::size_t i : datum.positive_indices()) out << " " << format_vector(datum.coroots()[i]);
  out << "\n";
  out << "simple_coroots";
  for (std::size_t k = 0; k < datum.semisimple_rank(); ++k) out << " " << format_vector(datum.simple_coroot(k));
  out << "\n";
  out << "lambda_S_basis";
  const auto basis = lambda_S_basis(spec);
  if (basis.empty()) out << " none";
  for (const auto& b : basis) out << " " << b.to_string();
  out << "\n";
  out << "notes " << entry.notes << "\n";
  return out.str();
}

// ------------------------------------------------------------------ loop files

namespace {

mpq_class parse_rational(const std::string& tok, std::size_t line) {
  static const std::regex rational_re(R"([+-]?[0-9]+(/[0-9]+)?)");
  if (!std::regex_match(tok, rational_re)) throw ParseError(line, "expected a rational a or a/b, got '" + tok + "'");
  mpq_class q;
  const std::string digits = tok[0] == '+' ? tok.substr(1) : tok;
  if (q.set_str(digits, 10) != 0) throw ParseError(line, "bad rational '" + tok + "'");
  if (sgn(q.get_den()) == 0) throw ParseError(line, "zero denominator in '" + tok + "'");
  q.canonicalize();
  return q;
}

std::string rational_text(const mpq_class& q) { return q.get_str(); }

}  // namespace

LoopFile parse_loop_text(std::string_view text) {
  const auto lines = tokenize(text);
  std::optional<std::size_t> size;
  std::optional<std::pair<std::string, std::size_t>> form_name;
  std::vector<std::pair<const Line*, std::string>> entry_lines;

  for (const Line& l : lines) {
    const std::string& key = l.tokens[0];
    if (key == "size") {
      if (size) throw ParseError(l.number, "duplicate 'size'");
      if (l.tokens.size() != 2) throw ParseError(l.number, "'size' takes one argument");
      const Int n = parse_int(l.tokens[1], l.number);
      if (n <= 0) throw ParseError(l.number, "size must be positive");
      size = static_cast<std::size_t>(n);
    } else if (key == "form") {
      if (form_name) throw ParseError(l.number, "duplicate 'form'");
      if (l.tokens.size() != 2) throw ParseError(l.number, "'form' takes one argument");
      form_name = std::make_pair(l.tokens[1], l.number);
    } else if (key == "entry") {
      entry_lines.emplace_back(&l, l.rest);
    } else {
      throw ParseError(l.number, "unknown key '" + key + "'");
    }
  }
  if (!size) throw ParseError(lines.empty() ? 1 : lines.front().number, "missing 'size'");
  if (!form_name) throw ParseError(lines.empty() ? 1 : lines.front().number, "missing 'form'");

  std::optional<LoopForm> form;
  try {
    form = LoopForm::parse(form_name->first, *size);
  } catch (const PreconditionError& e) {
    throw ParseError(form_name->second, e.what());
  }

  LaurentMatrix g(*size);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  static const std::regex entry_re(R"(^\s*(\d+)\s+(\d+)\s*:(.*)$)");
  static const std::regex tuple_re(R"(\(\s*([^,()]+?)\s*,\s*([^,()]+?)\s*,\s*([^,()]+?)\s*\))");
  for (const auto& [line, rest] : entry_lines) {
    std::smatch m;
    if (!std::regex_match(rest, m, entry_re))
      throw ParseError(line->number, "expected 'entry i j : (e, re, im) ...'");
    const std::size_t i = std::stoul(m[1]), j = std::stoul(m[2]);
    if (i >= *size || j >= *size) throw ParseError(line->number, "entry index out of range");
    if (!seen.insert({i, j}).second) throw ParseError(line->number, "duplicate entry " + m[1].str() + " " + m[2].str());

    const std::string tuples = m[3];
    LaurentPoly p;
    std::set<Int> exponents;
    auto it = std::sregex_iterator(tuples.begin(), tuples.end(), tuple_re);
    std::size_t consumed = 0;
    for (; it != std::sregex_iterator(); ++it) {
      const auto& t = *it;
      if (!trim(std::string_view(tuples).substr(consumed, static_cast<std::size_t>(t.position()) - consumed)).empty())
        throw ParseError(line->number, "unexpected text between tuples");
      consumed = static_cast<std::size_t>(t.position() + t.length());
      const Int e = parse_int(t[1], line->number);
      if (e < -1000000 || e > 1000000) throw ParseError(line->number, "exponent out of range");
      if (!exponents.insert(e).second) throw ParseError(line->number, "repeated exponent " + std::to_string(e));
      p += LaurentPoly::monomial(GaussRational(parse_rational(t[2], line->number), parse_rational(t[3], line->number)),
                                 static_cast<int>(e));
    }
    if (!trim(std::string_view(tuples).substr(consumed)).empty())
      throw ParseError(line->number, "unexpected text after tuples");
    g(i, j) = p;
  }
  return LoopFile{*form, g};
}

LoopFile load_loop_file(const std::string& path) { return parse_loop_text(read_file(path)); }

std::string format_loop_file(const LoopForm& form, const LaurentMatrix& g) {
  std::ostringstream out;
  out << "size " << g.size() << "\n";
  out << "form " << form.name() << "\n";
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (g(i, j).is_zero()) continue;
      out << "entry " << i << " " << j << " :";
      for (const auto& [e, c] : g(i, j).terms())
        out << " (" << e << ", " << rational_text(c.re) << ", " << rational_text(c.im) << ")";
      out << "\n";
    }
  return out.str();
}

// --------------------------------------------------------------- reports

std::string format_slice_report(const PosetSlice& slice) {
  std::ostringstream out;
  out << "spec " << slice.spec_name << "\n";
  out << "order " << to_string(slice.order) << "\n";
  out << "height_bound " << slice.height_bound << "\n";
  out << "image_index " << slice.image_index << "\n";
  out << "element_count " << slice.elements.size() << "\n";
  out << "edge_count " << slice.hasse_edges.size() << "\n";
  out << "component_count " << slice.components.size() << "\n";
  out << "elements\n";
  for (const auto& e : slice.elements) out << e.lambda.to_string() << "\n";
  out << "end\n";
  out << "edges\n";
  for (const auto& [lo, hi] : slice.hasse_edges)
    out << slice.elements[lo].lambda.to_string() << " -> " << slice.elements[hi].lambda.to_string() << "\n";
  out << "end\n";
  out << "components\n";
  for (std::size_t c = 0; c < slice.components.size(); ++c) {
    out << "component " << c << " size " << slice.components[c].size() << " minima";
    for (std::size_t m : component_minima(slice, slice.components[c])) out << " " << slice.elements[m].lambda.to_string();
    out << "\n";
  }
  out << "end\n";
  return out.str();
}

std::string format_slice_graph(const PosetSlice& slice) {
  std::ostringstream out;
  out << "digraph \"" << slice.spec_name << "_" << to_string(slice.order) << "\" {\n";
  for (const auto& e : slice.elements) out << "  \"" << e.lambda.to_string() << "\";\n";
  for (const auto& [lo, hi] : slice.hasse_edges)
    out << "  \"" << slice.elements[lo].lambda.to_string() << "\" -> \"" << slice.elements[hi].lambda.to_string()
        << "\";\n";
  out << "}\n";
  return out.str();
}

std::string format_pi1_report(const InvolutionSpec& spec, const PiOneModel& model, bool exact_model) {
  auto factors = [](const FiniteAbelianGroup& g) {
    std::string s;
    for (Int d : g.invariant_factors()) s += " " + std::to_string(d);
    return s.empty() ? std::string(" none") : s;
  };
  std::ostringstream out;
  out << "spec " << spec.name() << "\n";
  out << "pi1_G " << model.pi1G.describe() << "\n";
  out << "pi1_G_invariant_factors" << factors(model.pi1G) << "\n";
  out << "pi1_X " << model.pi1X.describe() << "\n";
  out << "pi1_X_invariant_factors" << factors(model.pi1X) << "\n";
  out << "restricted_coroot_generators";
  const auto gens = restricted_coroot_generators(spec);
  if (gens.empty()) out << " none";
  for (const auto& g : gens) out << " " << g.to_string();
  out << "\n";
  out << "image_generators";
  for (const auto& g : model.image_generators) out << " " << g.to_string();
  out << "\n";
  out << "image_classes";
  for (const auto& c : model.image_classes) out << " " << format_vector(c);
  out << "\n";
  bool trivial = true;
  for (const auto& c : model.image_classes)
    for (Int x : c) trivial = trivial && x == 0;
  out << "image_trivial " << (trivial ? "true" : "false") << "\n";
  out << "image_index " << model.image_index << "\n";
  out << "lattice_model " << (exact_model ? "catalog" : "unverified (input is not a catalog entry)") << "\n";
  return out.str();
}

Coweight parse_coweight(std::string_view text) {
  IntVector coords;
  std::string s(text);
  if (!s.empty() && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  std::size_t start = 0;
  for (;;) {
    const auto comma = s.find(',', start);
    const std::string tok = trim(std::string_view(s).substr(start, comma == std::string::npos ? std::string::npos : comma - start));
    if (tok.empty()) throw PreconditionError("coweight '" + std::string(text) + "' has an empty coordinate");
    try {
      coords.push_back(parse_int(tok, 0));
    } catch (const ParseError&) {
      throw PreconditionError("coweight '" + std::string(text) + "': '" + tok + "' is not an integer");
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return Coweight(std::move(coords));
}

}  // namespace matsuki
