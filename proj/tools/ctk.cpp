// ctk: command-line front end for the step-sequence algebra library.
//
// One binary, subcommand style.  Alphabets, nets and projection families are
// passed as file paths; sequences are inline arguments, repeated --seq
// options, or "-" / no argument for stdin.  Exit codes: 0 success or a true
// answer, 1 a false answer, 2 usage or input errors, 3 reconstruction from an
// unrealizable projection family.

#include <cstddef>
#include <iostream>
#include <fstream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "ctk/alphabet.hpp"
#include "ctk/eni.hpp"
#include "ctk/errors.hpp"
#include "ctk/indivisibility.hpp"
#include "ctk/mztrace.hpp"
#include "ctk/oracle.hpp"
#include "ctk/projection.hpp"
#include "ctk/reconstruct.hpp"
#include "ctk/stepseq.hpp"

namespace {

struct GlobalOptions {
  std::string output = "human";  // "human" or "structured"
  bool show_lambda = false;
  unsigned seed = 0;  // reserved for randomized tooling; no effect on results

  bool structured() const { return output == "structured"; }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) ctk::fail(ctk::Errc::parse_error, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string read_stdin() {
  std::ostringstream buffer;
  buffer << std::cin.rdbuf();
  return buffer.str();
}

/// Inline sequence arguments: positionals and --seq occurrences, in order;
/// "-" (or an empty list when one sequence is expected) reads stdin.
std::vector<std::string> gather_inputs(const std::vector<std::string>& positional,
                                       const std::vector<std::string>& via_option,
                                       std::size_t expected) {
  std::vector<std::string> texts = positional;
  texts.insert(texts.end(), via_option.begin(), via_option.end());
  if (texts.empty() && expected == 1) texts.push_back("-");
  bool used_stdin = false;
  for (std::string& text : texts) {
    if (text != "-") continue;
    if (used_stdin) {
      ctk::fail(ctk::Errc::parse_error, "stdin ('-') may supply at most one sequence");
    }
    used_stdin = true;
    text = read_stdin();
  }
  if (texts.size() != expected) {
    ctk::fail(ctk::Errc::parse_error, "expected " + std::to_string(expected) +
                                          " sequence argument(s), got " +
                                          std::to_string(texts.size()));
  }
  return texts;
}

/// Formats a sequence for display; the empty sequence prints as "" unless
/// --show-lambda asks for a visible marker.
std::string show(const GlobalOptions& global, const ctk::ComtraceAlphabet& alphabet,
                 const ctk::StepSequence& sequence) {
  std::string text = ctk::format_stepseq(alphabet, sequence);
  if (text.empty() && global.show_lambda) return "λ";
  return text;
}

std::string show_word(const GlobalOptions& global, const ctk::ConcurrentAlphabet& alphabet,
                      const ctk::Word& word) {
  std::string text = ctk::format_word(alphabet, word);
  if (text.empty() && global.show_lambda) return "λ";
  return text;
}

/// One result line: "key: value" in structured mode, bare value otherwise.
void emit(const GlobalOptions& global, const std::string& key, const std::string& value) {
  if (global.structured()) {
    std::cout << key << ": " << value << "\n";
  } else {
    std::cout << value << "\n";
  }
}

void emit_bool(const GlobalOptions& global, const std::string& key, bool value) {
  emit(global, key, value ? "true" : "false");
}

std::string join_names(const ctk::ComtraceAlphabet& alphabet,
                       const std::vector<ctk::ActionId>& actions) {
  std::string out;
  for (ctk::ActionId a : actions) {
    if (!out.empty()) out += ' ';
    out += alphabet.name(a);
  }
  return out;
}

void print_stages(const GlobalOptions& global, const ctk::ComtraceAlphabet& alphabet,
                  const std::vector<ctk::ReconstructionStage>& stages) {
  (void)global;  // the stage dump is identical in both output modes
  for (const ctk::ReconstructionStage& stage : stages) {
    const std::string prefix = "stage " + std::to_string(stage.stage) + " ";
    std::cout << prefix << "cpa: " << join_names(alphabet, stage.analysis.cpa) << "\n";
    std::string cnd;
    for (auto [a, b] : stage.analysis.cnd) {
      if (!cnd.empty()) cnd += ' ';
      cnd += "(" + alphabet.name(a) + " " + alphabet.name(b) + ")";
    }
    std::cout << prefix << "cnd: " << cnd << "\n";
    std::cout << prefix << "impossible: " << join_names(alphabet, stage.impossible) << "\n";
    std::cout << prefix << "possible: " << join_names(alphabet, stage.possible) << "\n";
    std::cout << prefix << "chosen: "
              << (stage.chosen.empty() ? std::string()
                                       : ctk::format_step(alphabet, stage.chosen))
              << "\n";
  }
}

// ---------------------------------------------------------------------------
// Subcommand option bags.  Each bag owns the values its callback reads.

struct AlphabetArgs {
  std::string path;
  std::vector<std::string> positional;
  std::vector<std::string> seq;

  ctk::ComtraceAlphabet load() const { return ctk::parse_comtrace_alphabet(read_file(path)); }
};

void add_alphabet_option(CLI::App* cmd, AlphabetArgs& args) {
  cmd->add_option("-a,--alphabet", args.path, "alphabet file (actions/sim/ser lines)")
      ->required();
}

void add_sequence_inputs(CLI::App* cmd, AlphabetArgs& args, const std::string& label) {
  cmd->add_option("sequence", args.positional, label);
  cmd->add_option("--seq", args.seq, label);
}

}  // namespace

int main(int argc, char** argv) {
  GlobalOptions global;
  int exit_code = 0;

  CLI::App app{"step-sequence algebra toolkit: equivalence, canonical forms,\n"
               "projections, reconstruction, and net-derived alphabets"};
  app.require_subcommand(1);
  app.add_option("--output", global.output, "output mode")
      ->check(CLI::IsMember({"human", "structured"}))
      ->capture_default_str();
  app.add_flag("--show-lambda", global.show_lambda,
               "print the empty sequence as λ instead of an empty line");
  app.add_option("--seed", global.seed,
                 "seed for randomized tooling; never affects library results");

  auto subcommand = [&](CLI::App* parent, const std::string& name, const std::string& help) {
    CLI::App* cmd = parent->add_subcommand(name, help);
    cmd->fallthrough();
    return cmd;
  };

  // --- validate ------------------------------------------------------------
  struct {
    AlphabetArgs alphabet;
    std::string ind_path;
    std::string net_path;
    std::string proj_path;
  } validate_args;
  {
    CLI::App* cmd = subcommand(&app, "validate",
                               "check alphabets, nets, projection families and sequences");
    cmd->add_option("-a,--alphabet", validate_args.alphabet.path, "alphabet file");
    cmd->add_option("-i,--ind-alphabet", validate_args.ind_path,
                    "concurrent alphabet file (ind lines)");
    cmd->add_option("--net", validate_args.net_path, "net file");
    cmd->add_option("--proj", validate_args.proj_path,
                    "projection family file (requires --alphabet)");
    cmd->add_option("sequence", validate_args.alphabet.positional,
                    "sequences (or words with --ind-alphabet) to check");
    cmd->add_option("--seq", validate_args.alphabet.seq, "same as the positional sequences");
    cmd->callback([&] {
      const auto& args = validate_args;
      if (args.alphabet.path.empty() && args.ind_path.empty() && args.net_path.empty()) {
        ctk::fail(ctk::Errc::parse_error,
                  "nothing to validate: give --alphabet, --ind-alphabet or --net");
      }
      if (!args.alphabet.path.empty() && !args.ind_path.empty()) {
        ctk::fail(ctk::Errc::parse_error, "--alphabet and --ind-alphabet are exclusive");
      }
      if (!args.proj_path.empty() && args.alphabet.path.empty()) {
        ctk::fail(ctk::Errc::parse_error, "--proj requires --alphabet");
      }
      std::vector<std::string> texts = args.alphabet.positional;
      texts.insert(texts.end(), args.alphabet.seq.begin(), args.alphabet.seq.end());
      if (!args.alphabet.path.empty()) {
        ctk::ComtraceAlphabet alphabet = args.alphabet.load();
        if (global.structured()) {
          std::cout << "actions: " << join_names(alphabet, [&] {
            std::vector<ctk::ActionId> all(alphabet.size());
            for (int i = 0; i < alphabet.size(); ++i) all[i] = i;
            return all;
          }()) << "\n";
          std::cout << "steps: " << ctk::enumerate_steps(alphabet).size() << "\n";
        }
        for (const std::string& text : texts) {
          ctk::StepSequence sequence = ctk::parse_stepseq(alphabet, text);
          if (global.structured()) {
            std::cout << "sequence: " << show(global, alphabet, sequence) << "\n";
          }
        }
      }
      if (!args.ind_path.empty()) {
        ctk::ConcurrentAlphabet alphabet = ctk::parse_concurrent_alphabet(read_file(args.ind_path));
        if (global.structured()) {
          std::string names;
          for (const std::string& name : alphabet.actions()) {
            if (!names.empty()) names += ' ';
            names += name;
          }
          std::cout << "actions: " << names << "\n";
        }
        for (const std::string& text : texts) {
          ctk::Word word = ctk::parse_word(alphabet, text);
          if (global.structured()) {
            std::cout << "word: " << show_word(global, alphabet, word) << "\n";
          }
        }
      }
      if (!args.net_path.empty()) {
        ctk::eni::Net net = ctk::eni::parse_net(read_file(args.net_path));
        if (global.structured()) {
          std::cout << "places: " << net.place_count() << "\n";
          std::cout << "transitions: " << net.transition_count() << "\n";
          std::cout << "marking: " << ctk::eni::format_marking(net, net.initial_marking())
                    << "\n";
        }
      }
      if (!args.proj_path.empty()) {
        ctk::ComtraceAlphabet alphabet = args.alphabet.load();
        ctk::ProjectionSet set =
            ctk::parse_projection_set(alphabet, read_file(args.proj_path));
        if (global.structured()) {
          std::cout << "tracked-pairs: " << set.tracked_pairs().size() << "\n";
          std::cout << "symbols: " << set.total_symbols() << "\n";
        }
      }
      if (global.structured()) {
        std::cout << "valid: true\n";
      } else {
        std::cout << "ok\n";
      }
    });
  }

  // --- equiv ----------------------------------------------------------------
  AlphabetArgs equiv_args;
  {
    CLI::App* cmd = subcommand(&app, "equiv", "are two step sequences congruent?");
    add_alphabet_option(cmd, equiv_args);
    add_sequence_inputs(cmd, equiv_args, "the two sequences to compare");
    cmd->callback([&] {
      ctk::ComtraceAlphabet alphabet = equiv_args.load();
      std::vector<std::string> texts =
          gather_inputs(equiv_args.positional, equiv_args.seq, 2);
      bool equal = ctk::equivalent(alphabet, ctk::parse_stepseq(alphabet, texts[0]),
                                   ctk::parse_stepseq(alphabet, texts[1]));
      emit_bool(global, "equivalent", equal);
      exit_code = equal ? 0 : 1;
    });
  }

  // --- canon ----------------------------------------------------------------
  struct {
    AlphabetArgs alphabet;
    std::string form;
  } canon_args;
  {
    CLI::App* cmd = subcommand(&app, "canon", "canonical form of a sequence's class");
    add_alphabet_option(cmd, canon_args.alphabet);
    cmd->add_option("--form", canon_args.form, "foata (greatest) or lex (least)")
        ->required()
        ->check(CLI::IsMember({"foata", "lex"}));
    add_sequence_inputs(cmd, canon_args.alphabet, "the sequence");
    cmd->callback([&] {
      ctk::ComtraceAlphabet alphabet = canon_args.alphabet.load();
      std::vector<std::string> texts =
          gather_inputs(canon_args.alphabet.positional, canon_args.alphabet.seq, 1);
      ctk::StepSequence sequence = ctk::parse_stepseq(alphabet, texts[0]);
      ctk::StepSequence result = canon_args.form == "foata" ? ctk::foata(alphabet, sequence)
                                                            : ctk::minlex(alphabet, sequence);
      emit(global, "canon", show(global, alphabet, result));
    });
  }

  // --- project ----------------------------------------------------------------
  AlphabetArgs project_args;
  {
    CLI::App* cmd = subcommand(&app, "project", "projection family of a sequence");
    add_alphabet_option(cmd, project_args);
    add_sequence_inputs(cmd, project_args, "the sequence");
    cmd->callback([&] {
      ctk::ComtraceAlphabet alphabet = project_args.load();
      std::vector<std::string> texts =
          gather_inputs(project_args.positional, project_args.seq, 1);
      ctk::ProjectionSet set =
          ctk::projection_representation(alphabet, ctk::parse_stepseq(alphabet, texts[0]));
      std::cout << ctk::format_projection_set(alphabet, set);
    });
  }

  // --- reconstruct ------------------------------------------------------------
  struct {
    std::string alphabet_path;
    std::string proj_path;
    std::string strategy = "foata";
    bool trace_stages = false;
  } reconstruct_args;
  {
    CLI::App* cmd = subcommand(&app, "reconstruct",
                               "rebuild a sequence from a projection family");
    cmd->add_option("-a,--alphabet", reconstruct_args.alphabet_path, "alphabet file")
        ->required();
    cmd->add_option("--proj", reconstruct_args.proj_path,
                    "projection family file ('-' for stdin)")
        ->required();
    cmd->add_option("--strategy", reconstruct_args.strategy,
                    "foata (maximal steps) or lex (least steps)")
        ->check(CLI::IsMember({"foata", "lex"}))
        ->capture_default_str();
    cmd->add_flag("--trace-stages", reconstruct_args.trace_stages,
                  "dump cpa/cnd/impossible/possible/chosen per stage");
    cmd->callback([&] {
      ctk::ComtraceAlphabet alphabet =
          ctk::parse_comtrace_alphabet(read_file(reconstruct_args.alphabet_path));
      std::string text = reconstruct_args.proj_path == "-"
                             ? read_stdin()
                             : read_file(reconstruct_args.proj_path);
      ctk::ProjectionSet set = ctk::parse_projection_set(alphabet, text);
      ctk::Strategy strategy = reconstruct_args.strategy == "foata"
                                   ? ctk::Strategy::foata()
                                   : ctk::Strategy::minlex();
      std::vector<ctk::ReconstructionStage> stages;
      ctk::ReconstructResult result = ctk::reconstruct(
          alphabet, set, strategy, reconstruct_args.trace_stages ? &stages : nullptr);
      if (reconstruct_args.trace_stages) print_stages(global, alphabet, stages);
      if (const auto* sequence = std::get_if<ctk::StepSequence>(&result)) {
        if (global.structured()) emit_bool(global, "realizable", true);
        emit(global, "result", show(global, alphabet, *sequence));
      } else {
        const auto& failure = std::get<ctk::NotRealizable>(result);
        if (global.structured()) {
          emit_bool(global, "realizable", false);
          emit(global, "stage", std::to_string(failure.stage));
          emit(global, "reason", failure.reason);
        } else {
          std::cerr << "not realizable at stage " << failure.stage << ": " << failure.reason
                    << "\n";
        }
        exit_code = 3;
      }
    });
  }

  // --- split ----------------------------------------------------------------
  AlphabetArgs split_args;
  {
    CLI::App* cmd = subcommand(&app, "split",
                               "equivalent sequence made of indivisible steps only");
    add_alphabet_option(cmd, split_args);
    add_sequence_inputs(cmd, split_args, "the sequence");
    cmd->callback([&] {
      ctk::ComtraceAlphabet alphabet = split_args.load();
      std::vector<std::string> texts = gather_inputs(split_args.positional, split_args.seq, 1);
      ctk::StepSequence result =
          ctk::split(alphabet, ctk::parse_stepseq(alphabet, texts[0]));
      emit(global, "split", show(global, alphabet, result));
    });
  }

  // --- indiv-steps ------------------------------------------------------------
  AlphabetArgs indiv_args;
  {
    CLI::App* cmd = subcommand(&app, "indiv-steps", "all indivisible steps, sorted");
    add_alphabet_option(cmd, indiv_args);
    cmd->callback([&] {
      ctk::ComtraceAlphabet alphabet = indiv_args.load();
      for (const ctk::Step& step : ctk::indiv_alphabet(alphabet)) {
        emit(global, "step", ctk::format_step(alphabet, step));
      }
    });
  }

  // --- classes ----------------------------------------------------------------
  struct {
    AlphabetArgs alphabet;
    std::string step;
  } classes_args;
  {
    CLI::App* cmd = subcommand(&app, "classes",
                               "equivalence classes of a step under indivisibility");
    add_alphabet_option(cmd, classes_args.alphabet);
    cmd->add_option("--step", classes_args.step, "the step, e.g. \"(abc)\"");
    cmd->add_option("sequence", classes_args.alphabet.positional, "the step, positionally");
    cmd->callback([&] {
      ctk::ComtraceAlphabet alphabet = classes_args.alphabet.load();
      std::vector<std::string> via_option;
      if (!classes_args.step.empty()) via_option.push_back(classes_args.step);
      std::vector<std::string> texts =
          gather_inputs(classes_args.alphabet.positional, via_option, 1);
      ctk::StepSequence sequence = ctk::parse_stepseq(alphabet, texts[0]);
      if (sequence.size() != 1) {
        ctk::fail(ctk::Errc::parse_error, "classes expects exactly one step");
      }
      for (const ctk::Step& cls : ctk::step_equiv_classes(alphabet, sequence[0]).classes) {
        emit(global, "class", ctk::format_step(alphabet, cls));
      }
    });
  }

  // --- enumerate ---------------------------------------------------------------
  struct {
    AlphabetArgs alphabet;
    std::size_t cap = ctk::kDefaultClassCap;
  } enumerate_args;
  {
    CLI::App* cmd = subcommand(&app, "enumerate",
                               "every sequence equivalent to the given one, sorted");
    add_alphabet_option(cmd, enumerate_args.alphabet);
    cmd->add_option("--cap", enumerate_args.cap, "bail out beyond this many members")
        ->capture_default_str();
    add_sequence_inputs(cmd, enumerate_args.alphabet, "the sequence");
    cmd->callback([&] {
      ctk::ComtraceAlphabet alphabet = enumerate_args.alphabet.load();
      std::vector<std::string> texts =
          gather_inputs(enumerate_args.alphabet.positional, enumerate_args.alphabet.seq, 1);
      std::vector<ctk::StepSequence> members = ctk::enumerate_class(
          alphabet, ctk::parse_stepseq(alphabet, texts[0]), enumerate_args.cap);
      for (const ctk::StepSequence& member : members) {
        emit(global, "member", show(global, alphabet, member));
      }
      if (global.structured()) emit(global, "count", std::to_string(members.size()));
    });
  }

  // --- trace -------------------------------------------------------------------
  struct {
    std::string alphabet_path;
    std::string mode = "word";
    std::string form = "foata";
    std::vector<std::string> positional;
    std::vector<std::string> seq;
  } trace_args;
  {
    CLI::App* cmd = subcommand(&app, "trace",
                               "word-trace and step-trace operations over an independence "
                               "alphabet");
    cmd->require_subcommand(1);
    auto add_common = [&](CLI::App* sub, const std::string& label) {
      sub->add_option("-a,--alphabet", trace_args.alphabet_path,
                      "concurrent alphabet file (ind lines)")
          ->required();
      sub->add_option("--mode", trace_args.mode, "word or step operands")
          ->check(CLI::IsMember({"word", "step"}))
          ->capture_default_str();
      sub->add_option("operand", trace_args.positional, label);
      sub->add_option("--seq", trace_args.seq, label);
    };

    CLI::App* equiv_cmd = subcommand(cmd, "equiv", "are the two operands trace-equivalent?");
    add_common(equiv_cmd, "the two operands");
    equiv_cmd->callback([&] {
      ctk::ConcurrentAlphabet alphabet =
          ctk::parse_concurrent_alphabet(read_file(trace_args.alphabet_path));
      std::vector<std::string> texts = gather_inputs(trace_args.positional, trace_args.seq, 2);
      bool equal;
      if (trace_args.mode == "word") {
        equal = ctk::trace_equivalent(alphabet, ctk::parse_word(alphabet, texts[0]),
                                      ctk::parse_word(alphabet, texts[1]));
      } else {
        ctk::ComtraceAlphabet embedded = ctk::comtrace_embedding(alphabet);
        equal = ctk::steptrace_equivalent(alphabet, ctk::parse_stepseq(embedded, texts[0]),
                                          ctk::parse_stepseq(embedded, texts[1]));
      }
      emit_bool(global, "equivalent", equal);
      exit_code = equal ? 0 : 1;
    });

    CLI::App* canon_cmd = subcommand(cmd, "canon", "canonical form of the operand's trace");
    add_common(canon_cmd, "the operand");
    canon_cmd->add_option("--form", trace_args.form, "foata (greatest) or lex (least)")
        ->check(CLI::IsMember({"foata", "lex"}))
        ->capture_default_str();
    canon_cmd->callback([&] {
      ctk::ConcurrentAlphabet alphabet =
          ctk::parse_concurrent_alphabet(read_file(trace_args.alphabet_path));
      std::vector<std::string> texts = gather_inputs(trace_args.positional, trace_args.seq, 1);
      if (trace_args.mode == "word") {
        ctk::Word word = ctk::parse_word(alphabet, texts[0]);
        ctk::Word result = trace_args.form == "foata" ? ctk::trace_foata(alphabet, word)
                                                      : ctk::trace_minlex(alphabet, word);
        emit(global, "canon", show_word(global, alphabet, result));
      } else {
        ctk::ComtraceAlphabet embedded = ctk::comtrace_embedding(alphabet);
        ctk::StepSequence sequence = ctk::parse_stepseq(embedded, texts[0]);
        ctk::StepSequence result = trace_args.form == "foata"
                                       ? ctk::steptrace_foata(alphabet, sequence)
                                       : ctk::steptrace_minlex(alphabet, sequence);
        emit(global, "canon", show(global, embedded, result));
      }
    });

    CLI::App* project_cmd = subcommand(cmd, "project", "projection family of the operand");
    add_common(project_cmd, "the operand");
    project_cmd->callback([&] {
      ctk::ConcurrentAlphabet alphabet =
          ctk::parse_concurrent_alphabet(read_file(trace_args.alphabet_path));
      ctk::ComtraceAlphabet embedded = ctk::comtrace_embedding(alphabet);
      std::vector<std::string> texts = gather_inputs(trace_args.positional, trace_args.seq, 1);
      ctk::ProjectionSet set =
          trace_args.mode == "word"
              ? ctk::trace_projections(alphabet, ctk::parse_word(alphabet, texts[0]))
              : ctk::steptrace_projections(alphabet, ctk::parse_stepseq(embedded, texts[0]));
      std::cout << ctk::format_projection_set(embedded, set);
    });
  }

  // --- eni ---------------------------------------------------------------------
  struct {
    std::string net_path;
    std::vector<std::string> positional;
    std::vector<std::string> seq;
    int max_steps = 0;
    std::size_t cap = ctk::kDefaultClassCap;
    bool disjoint_postsets = false;
  } eni_args;
  {
    CLI::App* cmd = subcommand(&app, "eni", "elementary nets with inhibitor arcs");
    cmd->require_subcommand(1);

    CLI::App* derive_cmd = subcommand(cmd, "derive",
                                      "alphabet of the net's concurrency structure");
    derive_cmd->add_option("--net", eni_args.net_path, "net file")->required();
    derive_cmd->callback([&] {
      ctk::eni::Net net = ctk::eni::parse_net(read_file(eni_args.net_path));
      std::cout << ctk::format_comtrace_alphabet(ctk::eni::derive_alphabet(net));
    });

    CLI::App* run_cmd = subcommand(cmd, "run", "fire a transition step sequence");
    run_cmd->add_option("--net", eni_args.net_path, "net file")->required();
    run_cmd->add_option("sequence", eni_args.positional, "the transition step sequence");
    run_cmd->add_option("--seq", eni_args.seq, "the transition step sequence");
    run_cmd->add_flag("--disjoint-postsets", eni_args.disjoint_postsets,
                      "require pairwise disjoint postsets inside a step");
    run_cmd->callback([&] {
      ctk::eni::Net net = ctk::eni::parse_net(read_file(eni_args.net_path));
      std::vector<std::string> texts = gather_inputs(eni_args.positional, eni_args.seq, 1);
      ctk::StepSequence sequence = ctk::eni::parse_transition_sequence(net, texts[0]);
      ctk::eni::FiringRule rule{eni_args.disjoint_postsets};
      ctk::eni::Marking marking = net.initial_marking();
      std::size_t fired = 0;
      std::cout << (global.structured() ? "marking 0: " : "")
                << ctk::eni::format_marking(net, marking) << "\n";
      for (const ctk::Step& step : sequence) {
        if (!ctk::eni::step_enabled(net, marking, step, rule)) {
          if (global.structured()) {
            emit_bool(global, "enabled", false);
            emit(global, "failed-step", std::to_string(fired + 1));
          } else {
            std::cerr << "step " << (fired + 1) << " not enabled: "
                      << ctk::eni::format_transition_sequence(net, {step}) << "\n";
          }
          exit_code = 1;
          return;
        }
        marking = ctk::eni::fire(net, marking, step, rule);
        ++fired;
        std::cout << (global.structured() ? "marking " + std::to_string(fired) + ": " : "")
                  << ctk::eni::format_marking(net, marking) << "\n";
      }
      if (global.structured()) emit_bool(global, "enabled", true);
    });

    CLI::App* reach_cmd = subcommand(cmd, "reach",
                                     "every execution of at most --max-steps steps, sorted");
    reach_cmd->add_option("--net", eni_args.net_path, "net file")->required();
    reach_cmd->add_option("--max-steps", eni_args.max_steps, "depth bound")->required();
    reach_cmd->add_option("--cap", eni_args.cap, "bail out beyond this many executions")
        ->capture_default_str();
    reach_cmd->add_flag("--disjoint-postsets", eni_args.disjoint_postsets,
                        "require pairwise disjoint postsets inside a step");
    reach_cmd->callback([&] {
      ctk::eni::Net net = ctk::eni::parse_net(read_file(eni_args.net_path));
      ctk::eni::FiringRule rule{eni_args.disjoint_postsets};
      for (const ctk::StepSequence& execution :
           ctk::eni::enumerate_executions(net, eni_args.max_steps, rule, eni_args.cap)) {
        std::string text = ctk::eni::format_transition_sequence(net, execution);
        if (text.empty() && global.show_lambda) text = "λ";
        emit(global, "execution", text);
      }
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& error) {
    int code = app.exit(error);
    return code == 0 ? 0 : 2;
  } catch (const ctk::Error& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 2;
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 2;
  }
  return exit_code;
}
