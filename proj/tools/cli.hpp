#pragma once

// Command-line front end. run() is kept free of process state so the test
// suite can drive it in-process with string streams.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "eqdeg/eqdeg.hpp"
#include "eqdeg/json_io.hpp"

namespace eqdeg::cli {

enum ExitCode : int { kOk = 0, kRefusal = 1, kInputError = 2 };

struct Options {
  std::string file;
  std::string order = "degrevlex";
  std::optional<std::size_t> dim;
  std::size_t trials = 5;
  std::uint64_t seed = 0;
  std::uint64_t coeff_bound = 65536;
  std::optional<std::uint64_t> prime;
  bool json = false;
  std::vector<std::string> sequence;
  std::string by;
  std::vector<std::string> components;
  std::string dir = "corpus";
};

namespace detail {

using Json = nlohmann::ordered_json;

inline IdealFile read_ideal_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path);
  return parse_ideal_file(in);
}

inline MonomialOrder order_of(const Options& o) {
  return o.order == "lex" ? MonomialOrder::lex() : MonomialOrder::degrevlex();
}

inline DegreeConfig degree_config(const Options& o) {
  DegreeConfig c;
  c.trials = o.trials;
  c.seed = o.seed;
  c.coefficient_bound = o.coeff_bound;
  return c;
}

template <class Fn>
int with_field(const Options& o, Fn&& fn) {
  if (o.prime) return fn(PrimeField(*o.prime));
  return fn(Rationals{});
}

template <class Field>
std::vector<Polynomial<Field>> parse_all(const std::vector<std::string>& texts, const IdealPresentation<Field>& a) {
  std::vector<Polynomial<Field>> out;
  for (const auto& t : texts) out.push_back(parse_polynomial(t, a.var_names(), a.field()));
  return out;
}

inline std::size_t required_dim(const Options& o, const IdealFile& file) {
  if (o.dim) return *o.dim;
  if (file.asserted_dimension) return *file.asserted_dimension;
  throw Error("no dimension given: pass --dim or add a 'dim:' header line");
}

inline std::string braces(const std::vector<std::string>& items) {
  std::string s = "{";
  for (std::size_t i = 0; i < items.size(); ++i) s += (i ? ", " : "") + items[i];
  return s + "}";
}

// Basis elements listed from the largest leading monomial down.
template <class Field>
std::vector<std::string> basis_strings(const GroebnerBasis<Field>& gb, const std::vector<std::string>& names) {
  std::vector<std::string> out;
  const auto& els = gb.elements();
  for (auto it = els.rbegin(); it != els.rend(); ++it) out.push_back(it->to_string(names));
  return out;
}

template <class Field>
Json field_json(const Field& f) {
  return Json{{"field", std::string(f.name())}, {"prime", field_json_prime(f)}};
}

inline std::string sequence_text(const SequenceCheckReport& r) {
  std::string kind = r.kind == SequenceKind::Secant ? "secant" : "regular";
  if (r.ok) return kind + ": ok";
  const auto& step = r.steps.back();
  std::string why;
  if (step.zero_divisor) {
    why = "zero divisor";
  } else if (step.unit_ideal) {
    why = "unit ideal";
  } else {
    why = "dimension " + std::to_string(step.dimension.value_or(-1));
  }
  return kind + ": fails at " + std::to_string(*r.failing_index) + " (" + why + ")";
}

template <class Field>
void print_degree(std::ostream& out, const DegreeReport<Field>& r, bool json) {
  if (json) {
    out << to_json(r).dump() << "\n";
    return;
  }
  out << "degree " << r.degree << "\n";
  out << "field " << r.field.name();
  if (auto p = r.field.prime()) out << " " << *p;
  out << ", seed " << r.seed << ", coefficient bound " << r.coefficient_bound << "\n";
  out << "trials";
  for (const auto& t : r.trials) out << " " << (t.succeeded() ? std::to_string(*t.count) : "-");
  out << " (agreement " << r.agreement_ratio.get_str() << ")\n";
}

inline std::vector<ComponentDegree> parse_components(const std::vector<std::string>& specs) {
  std::vector<ComponentDegree> out;
  for (const auto& s : specs) {
    auto colon = s.find(':');
    try {
      if (colon == std::string::npos) throw std::invalid_argument(s);
      std::size_t used = 0;
      auto k = std::stoull(s.substr(0, colon), &used);
      if (used != colon) throw std::invalid_argument(s);
      auto d = std::stoull(s.substr(colon + 1), &used);
      if (used != s.size() - colon - 1) throw std::invalid_argument(s);
      out.push_back({static_cast<std::size_t>(k), static_cast<std::uint64_t>(d)});
    } catch (const std::logic_error&) {
      throw Error("bad --component '" + s + "', expected height:degree");
    }
  }
  return out;
}

// --- subcommands ------------------------------------------------------------

inline int cmd_gb(const Options& o, std::ostream& out) {
  auto file = read_ideal_file(o.file);
  return with_field(o, [&](const auto& field) {
    auto a = file.to_ideal(field);
    auto gb = buchberger(a, order_of(o));
    auto basis = basis_strings(gb, a.var_names());
    if (o.json) {
      Json j = field_json(field);
      j["order"] = gb.order().name();
      j["basis"] = basis;
      out << j.dump() << "\n";
    } else {
      out << braces(basis) << "\n";
    }
    return kOk;
  });
}

inline int cmd_dim(const Options& o, std::ostream& out) {
  auto file = read_ideal_file(o.file);
  return with_field(o, [&](const auto& field) {
    auto gb = buchberger(file.to_ideal(field), order_of(o));
    long d = dimension(gb);
    auto count = gb.is_unit() ? std::optional<std::uint64_t>(0) : standard_monomial_count(gb);
    if (o.json) {
      Json j;
      j["dimension"] = d;
      j["standard_monomials"] = count ? Json(*count) : Json(nullptr);
      out << j.dump() << "\n";
    } else {
      out << "dimension " << d << (gb.is_unit() ? " (unit ideal)" : "") << "\n";
      if (count && !gb.is_unit()) out << "standard monomials " << *count << "\n";
    }
    return kOk;
  });
}

inline int cmd_degree(const Options& o, std::ostream& out) {
  auto file = read_ideal_file(o.file);
  std::size_t m = required_dim(o, file);
  return with_field(o, [&](const auto& field) {
    auto config = degree_config(o);
    config.order = order_of(o);
    print_degree(out, degree_equidimensional(file.to_ideal(field), m, config), o.json);
    return kOk;
  });
}

inline int cmd_quotient(const Options& o, std::ostream& out) {
  auto file = read_ideal_file(o.file);
  return with_field(o, [&](const auto& field) {
    auto a = file.to_ideal(field);
    auto f = parse_polynomial(o.by, a.var_names(), field);
    auto q = buchberger(ideal_quotient(a, f), order_of(o));
    auto basis = basis_strings(q, a.var_names());
    if (o.json) {
      out << Json{{"generators", basis}}.dump() << "\n";
    } else {
      out << braces(basis) << "\n";
    }
    return kOk;
  });
}

inline int cmd_sequence(const Options& o, std::ostream& out, SequenceKind kind) {
  auto file = read_ideal_file(o.file);
  return with_field(o, [&](const auto& field) {
    auto a = file.to_ideal(field);
    auto fs = parse_all(o.sequence, a);
    auto r = kind == SequenceKind::Regular ? is_regular_sequence(a, fs) : is_secant_sequence(a, required_dim(o, file), fs);
    out << (o.json ? to_json(r).dump() : sequence_text(r)) << "\n";
    return kOk;
  });
}

inline int cmd_bezout(const Options& o, std::ostream& out) {
  if (o.prime) throw PreconditionError("bezout-check runs over the rationals only");
  auto file = read_ideal_file(o.file);
  auto a = file.to_ideal(Rationals{});
  auto r = check_bezout_regular(a, required_dim(o, file), parse_all(o.sequence, a), degree_config(o));
  if (o.json) {
    out << to_json(r).dump() << "\n";
  } else {
    out << "lhs " << r.lhs << (r.holds ? " <= " : " > ") << "rhs " << r.rhs << ": " << (r.holds ? "holds" : "fails")
        << "\n";
  }
  return kOk;
}

inline int cmd_mw(const Options& o, std::ostream& out) {
  auto file = read_ideal_file(o.file);
  return with_field(o, [&](const auto& field) {
    auto r = masser_wustholz_check(file.to_ideal(field), parse_components(o.components));
    if (o.json) {
      out << to_json(r).dump() << "\n";
      return kOk;
    }
    for (const auto& c : r.components) {
      out << "height " << c.height << ": degree " << c.degree << (c.holds ? " <= " : " > ") << c.bound << "\n";
    }
    out << "total " << r.total_degree << (r.total_degree <= r.total_bound ? " <= " : " > ") << r.total_bound << "\n";
    out << (r.holds ? "holds" : "fails") << "\n";
    return kOk;
  });
}

inline int cmd_hilbert(const Options& o, std::ostream& out) {
  auto file = read_ideal_file(o.file);
  return with_field(o, [&](const auto& field) {
    auto r = hilbert_degree_oracle(file.to_ideal(field));
    if (o.json) {
      out << to_json(r).dump() << "\n";
    } else {
      out << "dimension " << r.affine_dimension << "\n" << "degree " << r.degree << "\n" << "numerator";
      for (auto c : r.hilbert.numerator) out << " " << c;
      out << "\n";
    }
    return kOk;
  });
}

// Cross-checks one manifest entry. Every failed comparison is appended to
// `failures`; the returned object records what was computed.
template <class Field>
Json check_entry(const Json& entry, const std::filesystem::path& dir, const Field& field, const DegreeConfig& config,
                 std::vector<std::string>& failures) {
  const std::string name = entry.at("name");
  auto fail = [&](const std::string& what) { failures.push_back(name + ": " + what); };
  auto a = read_ideal_file((dir / entry.at("file").get<std::string>()).string()).to_ideal(field);
  const long dim = entry.at("dim");
  const std::uint64_t expected_degree = entry.at("degree");
  const bool equidimensional = entry.at("equidimensional");

  Json j;
  j["name"] = name;
  auto drl = buchberger(a, MonomialOrder::degrevlex());
  auto lex = buchberger(a, MonomialOrder::lex());
  long computed_dim = dimension(drl);
  j["dim"] = computed_dim;
  if (computed_dim != dim) fail("dimension " + std::to_string(computed_dim) + ", expected " + std::to_string(dim));

  bool sound = satisfies_buchberger_criterion(drl) && satisfies_buchberger_criterion(lex);
  for (const auto& g : a.generators()) {
    auto r = normal_form(g, drl);
    sound = sound && r.is_zero() && normal_form(r, drl) == r;
  }
  if (is_zero_dimensional(drl)) sound = sound && standard_monomial_count(drl) == standard_monomial_count(lex);
  j["gb_sound"] = sound;
  if (!sound) fail("Groebner basis check");

  if (equidimensional) {
    auto d = degree_equidimensional(a, static_cast<std::size_t>(dim), config);
    auto oracle = hilbert_degree_oracle(a);
    j["degree"] = d.degree;
    j["oracle_degree"] = oracle.degree;
    j["oracle_dim"] = oracle.affine_dimension;
    if (d.degree != expected_degree) {
      fail("degree " + std::to_string(d.degree) + ", expected " + std::to_string(expected_degree));
    }
    if (oracle.degree != static_cast<std::int64_t>(d.degree) || oracle.affine_dimension != dim) {
      fail("oracle disagrees (" + std::to_string(oracle.affine_dimension) + ", " + std::to_string(oracle.degree) + ")");
    }
  } else {
    j["degree"] = nullptr;
  }

  std::vector<ComponentDegree> components;
  for (const auto& c : entry.at("components")) components.push_back({c.at("height"), c.at("degree")});
  auto mw = masser_wustholz_check(a, components);
  if (mw.total_degree != expected_degree) fail("component degrees do not sum to the degree");
  j["mw_holds"] = mw.holds;
  if (!mw.holds) fail("Masser-Wustholz bound");
  return j;
}

inline int cmd_corpus(const Options& o, std::ostream& out, std::ostream& err) {
  std::filesystem::path dir(o.dir);
  std::ifstream in(dir / "manifest.json");
  if (!in) throw Error("cannot read " + (dir / "manifest.json").string());
  Json manifest;
  try {
    manifest = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("bad manifest: ") + e.what());
  }
  std::vector<std::string> failures;
  Json results = Json::array();
  with_field(o, [&](const auto& field) {
    for (const auto& entry : manifest.at("entries")) {
      std::size_t before = failures.size();
      auto j = check_entry(entry, dir, field, degree_config(o), failures);
      j["ok"] = failures.size() == before;
      results.push_back(j);
    }
    return kOk;
  });
  if (o.json) {
    Json j;
    j["field"] = o.prime ? "Fp" : "QQ";
    j["prime"] = o.prime ? Json(*o.prime) : Json(nullptr);
    j["entries"] = results;
    j["passed"] = failures.empty();
    out << j.dump() << "\n";
  } else {
    for (const auto& r : results) {
      out << r["name"].get<std::string>() << ": dim " << r["dim"].dump() << ", "
          << (r["degree"].is_null() ? std::string("not equidimensional") : "degree " + r["degree"].dump())
          << (r["ok"].get<bool>() ? "  ok" : "  FAIL") << "\n";
    }
    out << results.size() - std::count_if(results.begin(), results.end(), [](const Json& r) { return !r["ok"].get<bool>(); })
        << "/" << results.size() << " entries pass\n";
  }
  for (const auto& f : failures) err << "corpus: " << f << "\n";
  return failures.empty() ? kOk : kRefusal;
}

}  // namespace detail

/// Runs the tool on `args` (program name excluded) and returns the exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Degrees of polynomial ideals: Groebner bases, randomized degree, Bezout checks", "eqdeg"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub, bool needs_file) {
    if (needs_file) sub->add_option("file", o.file, "ideal file")->required();
    sub->add_option("--order", o.order, "monomial order")->check(CLI::IsMember({"lex", "degrevlex"}));
    sub->add_option("--dim", o.dim, "asserted dimension m");
    sub->add_option("--trials", o.trials, "trials per round")->check(CLI::PositiveNumber);
    sub->add_option("--seed", o.seed, "random seed");
    sub->add_option("--coeff-bound", o.coeff_bound, "coefficient bound B");
    sub->add_option("--prime", o.prime, "work over F_p instead of QQ");
    sub->add_flag("--json", o.json, "JSON output");
  };
  auto* gb = app.add_subcommand("gb", "reduced Groebner basis");
  auto* dim = app.add_subcommand("dim", "Krull dimension");
  auto* degree = app.add_subcommand("degree", "degree of an equidimensional ideal");
  auto* quotient = app.add_subcommand("quotient", "ideal quotient a : f");
  auto* regular = app.add_subcommand("regular-check", "check a regular sequence");
  auto* secant = app.add_subcommand("secant-check", "check a secant sequence");
  auto* bezout = app.add_subcommand("bezout-check", "Bezout inequality along a regular sequence");
  auto* mw = app.add_subcommand("mw-bound", "Masser-Wustholz bound from component data");
  auto* hilbert = app.add_subcommand("hilbert-degree", "dimension and degree from the Hilbert series");
  auto* corpus = app.add_subcommand("corpus", "run the fixture suite");
  for (auto* sub : {gb, dim, degree, quotient, regular, secant, bezout, mw, hilbert}) add_common(sub, true);
  add_common(corpus, false);
  quotient->add_option("--by", o.by, "divisor polynomial")->required();
  for (auto* sub : {regular, secant, bezout}) sub->add_option("--seq", o.sequence, "sequence element")->required();
  mw->add_option("--component", o.components, "height:degree")->required();
  corpus->add_option("--dir", o.dir, "corpus directory");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "eqdeg: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (gb->parsed()) return detail::cmd_gb(o, out);
    if (dim->parsed()) return detail::cmd_dim(o, out);
    if (degree->parsed()) return detail::cmd_degree(o, out);
    if (quotient->parsed()) return detail::cmd_quotient(o, out);
    if (regular->parsed()) return detail::cmd_sequence(o, out, SequenceKind::Regular);
    if (secant->parsed()) return detail::cmd_sequence(o, out, SequenceKind::Secant);
    if (bezout->parsed()) return detail::cmd_bezout(o, out);
    if (mw->parsed()) return detail::cmd_mw(o, out);
    if (hilbert->parsed()) return detail::cmd_hilbert(o, out);
    return detail::cmd_corpus(o, out, err);
  } catch (const NotRegular& e) {
    err << "eqdeg: refused: " << e.what() << "\n" << "eqdeg: " << detail::sequence_text(e.report()) << "\n";
    return kRefusal;
  } catch (const Refusal& e) {
    err << "eqdeg: refused: " << e.what() << "\n";
    return kRefusal;
  } catch (const Error& e) {
    err << "eqdeg: " << e.what() << "\n";
    return kInputError;
  } catch (const nlohmann::json::exception& e) {
    err << "eqdeg: bad manifest: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace eqdeg::cli
