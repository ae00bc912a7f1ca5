#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "tanglecospan/error.hpp"
#include "tanglecospan/functor.hpp"
#include "tanglecospan/laws.hpp"
#include "tanglecospan/selftest.hpp"

namespace tc = tanglecospan;

namespace {

enum class Format { human, machine };

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kInputError = 2;

struct Input {
  std::string word;
  std::string file;
  std::string name;
};

struct NamedWord {
  std::string name;
  tc::TangleWord word;
};

std::vector<NamedWord> load_words(const Input& in) {
  if (!in.file.empty()) {
    std::ifstream f(in.file);
    if (!f) throw tc::Error("cannot read " + in.file);
    std::stringstream buf;
    buf << f.rdbuf();
    std::vector<NamedWord> out;
    for (auto& [name, w] : tc::parse_word_file(buf.str()))
      if (in.name.empty() || name == in.name) out.push_back({name, std::move(w)});
    if (out.empty()) throw tc::Error(in.name.empty() ? "no words in " + in.file : "no word named " + in.name);
    return out;
  }
  if (in.word.empty()) throw tc::Error("give a word or --file");
  return {{"", tc::parse_word(in.word)}};
}

void add_input(CLI::App* cmd, Input& in) {
  cmd->add_option("word", in.word, "tangle word, e.g. \"@[++] x1;x1\"");
  cmd->add_option("--file", in.file, "file of `name = word` lines");
  cmd->add_option("--name", in.name, "only the word with this name");
}

tc::Variant variant_of(const std::string& s) { return s == "unreduced" ? tc::Variant::unreduced : tc::Variant::reduced; }

// Runs `body` once per input word; named words get a header line.
template <class Body>
int for_each_word(const Input& in, Body body) {
  const auto words = load_words(in);
  int status = kOk;
  for (const auto& w : words) {
    if (!w.name.empty()) std::cout << "[" << w.name << "]\n";
    status = std::max(status, body(w.word));
  }
  return status;
}

int print_check(const std::string& name, bool ok, const std::string& summary, const std::string& counterexample,
                Format fmt) {
  std::cout << name << ": " << (ok ? "ok" : "FAIL") << '\n';
  if (fmt == Format::human && !summary.empty()) std::cout << "  " << summary << '\n';
  if (!ok && !counterexample.empty()) std::cout << counterexample << (counterexample.back() == '\n' ? "" : "\n");
  return ok ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tangle words, their Burau-type cospans and the checks around them"};
  app.require_subcommand(1);

  std::string format = "human";
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"human", "machine"}));

  Input in;
  std::string variant = "reduced";
  bool close = false;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  std::string which;

  auto* parse = app.add_subcommand("parse", "print the canonical form of a word");
  add_input(parse, in);
  auto* typecheck = app.add_subcommand("typecheck", "print the boundary of a word");
  add_input(typecheck, in);
  auto* burau = app.add_subcommand("burau", "matrix of a braid word");
  add_input(burau, in);
  burau->add_option("--variant", variant)->check(CLI::IsMember({"reduced", "unreduced"}));
  auto* gassner = app.add_subcommand("gassner", "multivariable matrix of a colored braid word");
  add_input(gassner, in);
  auto* cospan = app.add_subcommand("cospan", "cospan of a word, folded layer by layer");
  add_input(cospan, in);
  cospan->add_option("--variant", variant)->check(CLI::IsMember({"reduced", "unreduced"}));
  auto* alexander = app.add_subcommand("alexander", "Alexander module and polynomial of a link word");
  add_input(alexander, in);
  alexander->add_flag("--close", close, "close an endomorphism word first");
  auto* trace = app.add_subcommand("trace", "trace of the cospan of an endomorphism word");
  add_input(trace, in);
  trace->add_option("--variant", variant)->check(CLI::IsMember({"reduced", "unreduced"}));
  auto* oracle = app.add_subcommand("oracle", "presentation, Fox matrix and comparison with the fold");
  add_input(oracle, in);
  auto* check = app.add_subcommand("check", "randomized law checks");
  check->add_option("kind", which)->required()->check(CLI::IsMember({"lagrangian", "laws", "unitarity", "cross"}));
  check->add_option("--n", samples, "number of samples");
  check->add_option("--seed", seed);
  auto* selftest = app.add_subcommand("selftest", "run the acceptance battery");
  selftest->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }
  const Format fmt = format == "machine" ? Format::machine : Format::human;
  const bool human = fmt == Format::human;

  try {
    if (*parse) {
      return for_each_word(in, [&](const tc::TangleWord& w) {
        std::cout << (human ? "" : "word: ") << w.to_string() << '\n';
        return kOk;
      });
    }
    if (*typecheck) {
      return for_each_word(in, [&](const tc::TangleWord& w) {
        const tc::Typing ty = tc::typecheck(w);
        std::cout << "source: " << ty.source.to_string() << "\ntarget: " << ty.target.to_string() << '\n';
        if (human)
          for (std::size_t k = 0; k < w.layers.size(); ++k)
            std::cout << "  " << w.layers[k].to_string() << " -> " << ty.levels[k + 1].to_string() << '\n';
        return kOk;
      });
    }
    if (*burau) {
      return for_each_word(in, [&](const tc::TangleWord& w) {
        const tc::LMatrix m = tc::burau_matrix(w, variant_of(variant));
        if (human) std::cout << "burau (" << variant << ", " << m.rows() << "x" << m.cols() << "):\n";
        std::cout << m.to_string();
        return kOk;
      });
    }
    if (*gassner) {
      return for_each_word(in, [&](const tc::TangleWord& w) {
        const auto m = tc::gassner_matrix(w);
        if (human) std::cout << "gassner (" << m.rows() << "x" << m.cols() << "):\n";
        std::cout << m.to_string();
        return kOk;
      });
    }
    if (*cospan) {
      return for_each_word(in, [&](const tc::TangleWord& w) {
        const tc::Variant v = variant_of(variant);
        std::cout << tc::serialize(tc::evaluate(w, v).cospan);
        if (v == tc::Variant::reduced) {
          const tc::SignSeq& s = w.source;
          std::cout << "object_basis: e_j - e_(j+1) for j = " << (s.sign_sum() == 0 ? "2" : "1") << "..n-1 ("
                    << (s.sign_sum() == 0 ? "sphere" : "disc") << ")\n";
        }
        return kOk;
      });
    }
    if (*alexander) {
      return for_each_word(in, [&](const tc::TangleWord& w) {
        if (!close && tc::typecheck(w).source.size() != 0)
          throw tc::NotEndomorphism("the word has boundary points; pass --close to close it");
        const tc::AlexanderResult r = tc::alexander(close ? tc::closure(w) : w);
        std::cout << "alexander: " << r.polynomial.to_string() << '\n' << r.module.to_string();
        return kOk;
      });
    }
    if (*trace) {
      return for_each_word(in, [&](const tc::TangleWord& w) {
        const tc::Module m = tc::trace(tc::evaluate(w, variant_of(variant)).cospan);
        std::cout << m.to_string();
        std::cout << "invariants: " << tc::invariants(m).to_string() << '\n';
        return kOk;
      });
    }
    if (*oracle) {
      return for_each_word(in, [&](const tc::TangleWord& w) {
        const tc::GroupPresentation p = tc::wirtinger(tc::make_diagram(w));
        std::cout << p.to_string() << "fox:\n" << tc::fox_jacobian(p).to_string();
        const tc::CrossCheckReport report = tc::cross_check(w);
        std::cout << report.to_string();
        return report.ok() ? kOk : kCheckFailed;
      });
    }
    if (*check) {
      if (which == "laws") {
        tc::LawOptions opt;
        opt.seed = seed;
        if (samples > 0) opt.samples = samples;
        int status = kOk;
        for (const auto& r : tc::check_laws(opt)) {
          const std::string summary = std::to_string(r.samples - r.failures) + "/" + std::to_string(r.samples) + " samples agree";
          status = std::max(status, print_check(r.law, r.ok(), summary, r.counterexample, fmt));
        }
        return status;
      }
      tc::CriterionResult r;
      if (which == "unitarity")
        r = tc::criterion_unitarity();
      else if (which == "lagrangian")
        r = tc::criterion_lagrangian(seed, samples > 0 ? samples : 100);
      else
        r = tc::criterion_cross_check(seed, samples > 0 ? samples : 200);
      return print_check(which, r.pass, r.summary, r.counterexample, fmt);
    }
    if (*selftest) {
      const tc::SelftestReport report = tc::run_selftest(seed, &std::cerr);
      std::cout << report.to_string();
      return report.ok() ? kOk : kCheckFailed;
    }
  } catch (const tc::SyntaxError& e) {
    std::cerr << "syntax error: " << e.what() << '\n';
    return kInputError;
  } catch (const tc::TypeError& e) {
    std::cerr << "type error: " << e.what() << '\n';
    return kInputError;
  } catch (const tc::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
