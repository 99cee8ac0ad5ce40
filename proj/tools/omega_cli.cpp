// omega — a workbench around the halting probability of one fixed
// self-delimiting register machine. Subcommands: enumerate, omega,
// certify, complexity, oracle, analyze, kraft.
//
// Exit codes: 0 ok (oracle: Halts), 64 usage, 65 malformed checkpoint,
// 70 internal invariant violation; oracle maps NeverHalts/Undecided/
// InvalidPrefix to 1/2/3.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "omega/analysis.hpp"
#include "omega/checkpoint_io.hpp"
#include "omega/complexity.hpp"
#include "omega/machine.hpp"
#include "omega/omega.hpp"
#include "omega/oracle.hpp"

namespace {

constexpr int kExitUsage = 64;
constexpr int kExitBadCheckpoint = 65;
constexpr int kExitInternal = 70;

omega::Machine parse_machine(const std::string& name) {
  auto m = omega::machine_from_name(name);
  if (!m) throw CLI::ValidationError("--machine must be full or jumpfree");
  return *m;
}

omega::Checkpoint load_checkpoint(const std::string& path) {
  return omega::read_checkpoint(path);
}

std::string read_bit_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path);
  std::string bits, line;
  while (std::getline(f, line)) {
    for (char c : line) {
      if (c == '0' || c == '1') {
        bits.push_back(c);
      } else if (!std::isspace(static_cast<unsigned char>(c))) {
        throw std::runtime_error(path + ": input must be ASCII 0/1");
      }
    }
  }
  return bits;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"halting-probability workbench for a fixed prefix-free register machine"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  std::string machine_name = "full";
  int workers = 1;
  size_t precision = 128;
  app.add_option("--machine", machine_name, "machine variant: full|jumpfree");
  app.add_option("--workers", workers, "classification worker threads")
      ->check(CLI::PositiveNumber);
  app.add_option("--precision", precision, "fractional bits for reports/rounding")
      ->check(CLI::Range(size_t(8), size_t(4096)));

  // enumerate
  auto* cmd_enum = app.add_subcommand("enumerate", "classify the frontier and write a checkpoint");
  int max_len = 6;
  uint64_t step_budget = 4096, state_budget = 4096;
  std::string out_path, resume_path;
  cmd_enum->add_option("--max-len", max_len, "frontier length in bits")
      ->required()
      ->check(CLI::Range(2, 26));
  cmd_enum->add_option("--out", out_path, "checkpoint output path")->required();
  cmd_enum->add_option("--step-budget", step_budget)->check(CLI::PositiveNumber);
  cmd_enum->add_option("--state-budget", state_budget)->check(CLI::PositiveNumber);
  cmd_enum->add_option("--resume", resume_path, "prior checkpoint to extend");

  // omega / certify
  std::string ck_path;
  auto* cmd_omega = app.add_subcommand("omega", "report lower bound, residual and certified bits");
  cmd_omega->add_option("--checkpoint", ck_path)->required();
  auto* cmd_certify = app.add_subcommand("certify", "print the certified prefix of Omega");
  cmd_certify->add_option("--checkpoint", ck_path)->required();

  // complexity
  auto* cmd_cplx = app.add_subcommand("complexity", "program-size complexity over a frontier");
  std::string x_bits;
  int h_gt_m = -1, report_m = -1;
  cmd_cplx->add_option("bits", x_bits, "the string x (may be empty)");
  cmd_cplx->add_option("--checkpoint", ck_path)->required();
  cmd_cplx->add_option("--h-gt", h_gt_m, "certify the statement H(x) > m");
  cmd_cplx->add_option("--report", report_m, "incompleteness horizon up to m");

  // oracle
  auto* cmd_oracle = app.add_subcommand("oracle", "prefix-conditional halting oracle");
  std::string prefix_bits, program_bits, trust_name = "asserted";
  omega::OracleSchedule schedule;
  cmd_oracle->add_option("--prefix", prefix_bits, "trusted leading bits of Omega")->required();
  cmd_oracle->add_option("--program", program_bits, "queried program source")->required();
  cmd_oracle->add_option("--trust", trust_name, "certified|asserted");
  cmd_oracle->add_option("--oracle-steps", schedule.steps_per_round)->check(CLI::PositiveNumber);
  cmd_oracle->add_option("--oracle-rounds", schedule.rounds)->check(CLI::PositiveNumber);
  cmd_oracle->add_option("--oracle-max-len", schedule.pool_max_len)->check(CLI::Range(2, 26));

  // analyze
  auto* cmd_analyze = app.add_subcommand("analyze", "block statistics / monochromatic progressions");
  std::string file_path;
  int block_k = 0, ap_len = 0;
  cmd_analyze->add_option("--file", file_path, "ASCII 0/1 input, whitespace ignored")->required();
  cmd_analyze->add_option("--block", block_k, "non-overlapping block size k");
  cmd_analyze->add_option("--ap", ap_len, "monochromatic progression length");

  // kraft
  auto* cmd_kraft = app.add_subcommand("kraft", "verify the Kraft mass of the valid set");
  int kraft_len = 14;
  cmd_kraft->add_option("--max-len", kraft_len)->required()->check(CLI::Range(0, 48));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    omega::Machine machine = parse_machine(machine_name);

    if (*cmd_enum) {
      omega::Checkpoint resume;
      const omega::Checkpoint* resume_ptr = nullptr;
      if (!resume_path.empty()) {
        resume = load_checkpoint(resume_path);
        resume_ptr = &resume;
      }
      omega::Checkpoint ck = omega::run_frontier(machine, max_len, step_budget,
                                                 state_budget, resume_ptr, workers);
      omega::write_checkpoint(ck, out_path);
      std::cout << "wrote " << out_path << " machine=" << omega::machine_name(machine)
                << " max_len=" << max_len << " records=" << ck.records.size() << "\n";
      return 0;
    }

    if (*cmd_omega) {
      omega::Checkpoint ck = load_checkpoint(ck_path);
      std::cout << omega::format_omega_report(ck, precision);
      return 0;
    }

    if (*cmd_certify) {
      omega::Checkpoint ck = load_checkpoint(ck_path);
      omega::CertifiedPrefix cp = omega::certify_from_checkpoint(ck, precision);
      std::cout << "certified=" << (cp.bits.empty() ? "(none)" : cp.bits) << "\n"
                << "frontier=" << omega::machine_name(cp.machine)
                << " max_len=" << cp.max_len << "\n";
      return 0;
    }

    if (*cmd_cplx) {
      if (!omega::is_bits(x_bits)) {
        std::cerr << "x must be a bit string\n";
        return kExitUsage;
      }
      omega::Checkpoint ck = load_checkpoint(ck_path);
      if (report_m >= 0) {
        std::cout << omega::format_incompleteness(
            omega::incompleteness_report(ck, report_m));
        return 0;
      }
      if (h_gt_m >= 0) {
        omega::HGtOutcome out = omega::certify_h_gt(x_bits, h_gt_m, ck);
        std::cout << "H(" << x_bits << ") > " << h_gt_m << ": ";
        switch (out.kind) {
          case omega::HGtOutcome::Kind::Certified:
            std::cout << "certified\n";
            break;
          case omega::HGtOutcome::Kind::Refuted:
            std::cout << "refuted by " << *out.witness << "\n";
            break;
          case omega::HGtOutcome::Kind::Blocked:
            std::cout << "blocked by " << out.blockers.size() << " unresolved program(s)\n";
            for (const auto& b : out.blockers) std::cout << "  " << b << "\n";
            break;
        }
        return 0;
      }
      omega::ComplexityResult res = omega::h_upper(x_bits, ck);
      if (res.upper) {
        std::cout << "H(" << x_bits << ") <= " << *res.upper
                  << (res.exact ? " [exact]" : "") << "\n";
      } else {
        std::cout << "unknown at frontier " << ck.max_len << "\n";
      }
      return 0;
    }

    if (*cmd_oracle) {
      if (!omega::is_bits(prefix_bits) || !omega::is_bits(program_bits)) {
        std::cerr << "prefix and program must be bit strings\n";
        return kExitUsage;
      }
      auto program = omega::decode_ok(program_bits);
      if (!program || !omega::valid_for(machine, *program)) {
        std::cerr << "program does not decode on this machine\n";
        return kExitUsage;
      }
      omega::PrefixTrust trust = trust_name == "certified"
                                     ? omega::PrefixTrust::CertifiedByArtifact
                                     : omega::PrefixTrust::ExternallyAsserted;
      omega::OracleDecision d = omega::decide_halting(
          machine, {prefix_bits, trust}, *program, schedule);
      switch (d.kind) {
        case omega::OracleDecision::Kind::Halts:
          std::cout << "halts\n";
          return 0;
        case omega::OracleDecision::Kind::NeverHalts:
          std::cout << "never-halts\n";
          return 1;
        case omega::OracleDecision::Kind::Undecided:
          std::cout << "undecided steps=" << d.steps_used << "\n";
          return 2;
        case omega::OracleDecision::Kind::InvalidPrefix:
          std::cout << "invalid-prefix\n";
          return 3;
      }
      return kExitInternal;
    }

    if (*cmd_analyze) {
      std::string bits = read_bit_file(file_path);
      if (block_k > 0) {
        omega::BlockStats st = omega::block_stats(bits, block_k);
        std::cout << "k=" << st.k << " n_blocks=" << st.n_blocks
                  << " max_deviation=" << omega::to_string(st.max_deviation) << "\n";
        if (st.counts.size() <= 64) {
          for (size_t v = 0; v < st.counts.size(); ++v) {
            std::string name;
            for (int i = st.k - 1; i >= 0; --i)
              name.push_back((v >> i) & 1 ? '1' : '0');
            std::cout << "block " << name << " count=" << st.counts[v] << "\n";
          }
        }
      }
      if (ap_len > 0) {
        auto hit = omega::find_monochromatic_ap(bits, ap_len);
        if (hit) {
          std::cout << "ap L=" << ap_len << " symbol=" << hit->symbol
                    << " start=" << hit->start << " diff=" << hit->diff << "\n";
        } else {
          std::cout << "ap L=" << ap_len << " none\n";
        }
      }
      if (block_k <= 0 && ap_len <= 0) {
        std::cerr << "analyze needs --block or --ap\n";
        return kExitUsage;
      }
      return 0;
    }

    if (*cmd_kraft) {
      omega::KraftCheck kc = omega::kraft_check(machine, kraft_len);
      if (!kc.pass) {
        std::cout << "violation at length " << kc.violation_len << "\n";
        return kExitInternal;
      }
      std::cout << "pass\n"
                << "mass=" << omega::valid_mass(machine, kraft_len).to_binary(precision)
                << "\n";
      return 0;
    }
  } catch (const omega::CheckpointError& e) {
    std::cerr << "checkpoint error: " << e.what() << "\n";
    return kExitBadCheckpoint;
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitBadCheckpoint;
  }
  return kExitUsage;
}
