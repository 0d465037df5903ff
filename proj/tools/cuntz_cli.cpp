// Command-line surface over the library: every verb is a thin wrapper around
// one library pipeline.  Exit codes: 0 success, 1 domain error, 2 parse error.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cuntz/cantor.hpp"
#include "cuntz/normal.hpp"
#include "cuntz/polycyclic.hpp"
#include "cuntz/selftest.hpp"
#include "cuntz/streams.hpp"
#include "cuntz/thompson.hpp"
#include "cuntz/words.hpp"

using nlohmann::json;

namespace {

struct Options {
  int n = 2;
  bool json_out = false;
  bool no_normalize = false;
  std::uint64_t seed = 0;
  std::vector<std::string> args;
};

json symbol_json(const cuntz::Symbol& f) {
  json pairs = json::array();
  for (std::size_t i = 0; i < f.size(); ++i)
    pairs.push_back({{"dom", cuntz::to_string(f.dom(i))}, {"out", cuntz::to_string(f.out(i))}});
  return {{"n", f.alphabet().arity()}, {"pairs", pairs}};
}

void emit_symbol(const Options& opt, const cuntz::Symbol& f) {
  if (opt.json_out)
    std::cout << symbol_json(f).dump() << "\n";
  else
    std::cout << cuntz::to_string(f) << "\n";
}

void emit_bool(const Options& opt, bool b) {
  if (opt.json_out)
    std::cout << json{{"value", b}}.dump() << "\n";
  else
    std::cout << (b ? "true" : "false") << "\n";
}

void emit_string(const Options& opt, const std::string& key, const std::string& s) {
  if (opt.json_out)
    std::cout << json{{key, s}}.dump() << "\n";
  else
    std::cout << s << "\n";
}

const std::string& arg(const Options& opt, std::size_t i) {
  if (i >= opt.args.size()) cuntz::fail(cuntz::errc::parse, "missing argument");
  return opt.args[i];
}

cuntz::Symbol in_symbol(const Options& opt, std::size_t i) {
  return cuntz::parse_symbol(cuntz::Alphabet(opt.n), arg(opt, i));
}

// Normalizes the result of a symbol verb unless --no-normalize is given.
void out_symbol(const Options& opt, const cuntz::Symbol& f) {
  if (opt.no_normalize)
    emit_symbol(opt, f.canon());
  else
    emit_symbol(opt, cuntz::normalize(f).inner());
}

int dispatch(const std::string& verb, const Options& opt) {
  cuntz::Alphabet a(opt.n);

  if (verb == "mul") {
    out_symbol(opt, cuntz::compose(in_symbol(opt, 0), in_symbol(opt, 1)));
  } else if (verb == "inv") {
    out_symbol(opt, cuntz::invert(in_symbol(opt, 0)));
  } else if (verb == "star") {
    out_symbol(opt, cuntz::star(in_symbol(opt, 0)));
  } else if (verb == "meet") {
    out_symbol(opt, cuntz::meet(in_symbol(opt, 0), in_symbol(opt, 1)));
  } else if (verb == "join") {
    out_symbol(opt, cuntz::join(in_symbol(opt, 0), in_symbol(opt, 1)));
  } else if (verb == "complement") {
    emit_symbol(opt, cuntz::complement(cuntz::normalize(in_symbol(opt, 0))).inner());
  } else if (verb == "normalize") {
    emit_symbol(opt, cuntz::normalize(in_symbol(opt, 0)).inner());
  } else if (verb == "eq") {
    emit_bool(opt, cuntz::lenz_equal(in_symbol(opt, 0), in_symbol(opt, 1)));
  } else if (verb == "is-unit") {
    emit_bool(opt, cuntz::is_unit(cuntz::normalize(in_symbol(opt, 0))));
  } else if (verb == "order") {
    cuntz::GroupElement g(cuntz::normalize(in_symbol(opt, 0)));
    auto k = cuntz::g_order(g);
    emit_string(opt, "order", k ? std::to_string(*k) : "infinite-or-large");
  } else if (verb == "apply") {
    cuntz::Symbol f = in_symbol(opt, 0);
    const std::string& operand = arg(opt, 1);
    if (operand.find('(') != std::string::npos) {
      auto r = cuntz::eps_apply(f, cuntz::parse_stream(a, operand));
      emit_string(opt, "result", r ? cuntz::to_string(*r) : "undefined");
    } else {
      auto r = cuntz::act(f, cuntz::parse_word(a, operand));
      emit_string(opt, "result", r ? cuntz::to_string(*r) : "undefined");
    }
  } else if (verb == "enumerate-mpc") {
    int k = std::stoi(arg(opt, 0));
    auto codes = cuntz::enumerate_mpc(a, k);
    if (opt.json_out) {
      json arr = json::array();
      for (const auto& c : codes) arr.push_back(cuntz::to_string(c));
      std::cout << json{{"count", codes.size()}, {"codes", arr}}.dump() << "\n";
    } else {
      for (const auto& c : codes) std::cout << cuntz::to_string(c) << "\n";
    }
  } else if (verb == "refines") {
    emit_bool(opt, cuntz::refines(cuntz::parse_prefix_code(a, arg(opt, 0)),
                                  cuntz::parse_prefix_code(a, arg(opt, 1))));
  } else if (verb == "tight-cover") {
    cuntz::PrefixCode cover = cuntz::parse_prefix_code(a, arg(opt, 0));
    emit_bool(opt, cuntz::is_tight_cover(cover.words(), cuntz::parse_word(a, arg(opt, 1))));
  } else if (verb == "eval-term") {
    cuntz::CantorTerm t = cuntz::parse_term(a, arg(opt, 0));
    cuntz::TotalElement v = cuntz::eval_term(t, cuntz::TotalElement::identity(a));
    // Term values are reported as evaluated (canonical order, no caret
    // reduction) so the result mirrors the term's leaf structure.
    emit_symbol(opt, v.symbol().canon());
  } else if (verb == "term-of") {
    cuntz::TotalElement v{in_symbol(opt, 0)};
    emit_string(opt, "term", cuntz::to_string(cuntz::term_of(v)));
  } else if (verb == "germ") {
    cuntz::GroupElement u(cuntz::normalize(in_symbol(opt, 0)));
    cuntz::EvPeriodicString s = cuntz::parse_stream(a, arg(opt, 1));
    emit_string(opt, "germ", cuntz::to_string(cuntz::germ_of_unit(u, s)));
  } else if (verb == "gp-compose") {
    cuntz::GroupoidElement g1 = cuntz::parse_groupoid(a, arg(opt, 0));
    cuntz::GroupoidElement g2 = cuntz::parse_groupoid(a, arg(opt, 1));
    emit_string(opt, "result", cuntz::to_string(cuntz::gp_compose(g1, g2)));
  } else if (verb == "selftest") {
    auto results = cuntz::run_selftest(opt.seed);
    std::size_t pass = 0, total = 0;
    json arr = json::array();
    for (const auto& r : results) {
      pass += r.passed;
      total += r.total;
      if (opt.json_out)
        arr.push_back({{"family", r.family}, {"passed", r.passed}, {"total", r.total}});
      else
        std::cout << r.family << ": " << r.passed << "/" << r.total << "\n";
    }
    if (opt.json_out)
      std::cout << json{{"families", arr}, {"passed", pass}, {"total", total}}.dump() << "\n";
    else
      std::cout << "total: " << pass << "/" << total << "\n";
    return pass == total ? 0 : 1;
  } else {
    cuntz::fail(cuntz::errc::parse, "unknown verb: " + verb);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact algebra of prefix-code symbols, units, and streams"};
  app.require_subcommand(0, 0);

  Options opt;
  std::string verb;
  app.add_option("verb", verb,
                 "mul inv star meet join complement normalize eq is-unit order apply "
                 "enumerate-mpc refines tight-cover eval-term term-of germ gp-compose selftest")
      ->required();
  app.add_option("args", opt.args, "verb arguments");
  app.add_option("-n,--arity", opt.n, "alphabet size (2..10)")->check(CLI::Range(2, 10));
  app.add_flag("--json", opt.json_out, "structured output");
  app.add_flag("--no-normalize", opt.no_normalize, "skip normal forms on symbol results");
  app.add_option("--seed", opt.seed, "selftest seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    return dispatch(verb, opt);
  } catch (const cuntz::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == cuntz::errc::parse ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
