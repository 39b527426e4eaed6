// Copyright 2026 The goqec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli/cli.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cli/channel_file.hpp"
#include "cli/report.hpp"
#include "goqec/goqec.hpp"

namespace goqec::cli {

namespace {

using nlohmann::json;

struct GlobalOptions {
  double tol = kDefaultTolerance;
  std::uint64_t seed = 0;
  int samples = 20;
  std::string out;
  std::string format = "json";
};

struct CommandArgs {
  std::string channel;
  std::string second;  // recovery channel or second state
  std::string reading = "enlarged";
  std::string recovery_out;
  std::string state_out;
  double gamma = 0.5;
  bool emit = false;
};

void write_text_file(const std::string& path, const std::string& body) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot write " + path);
  file << body;
  if (!file) throw InputError("failed writing " + path);
}

void emit_body(const GlobalOptions& opts, const std::string& body, std::ostream& out) {
  if (opts.out.empty()) {
    out << body;
  } else {
    write_text_file(opts.out, body);
  }
}

void emit_report(const GlobalOptions& opts, const json& report, std::ostream& out) {
  emit_body(opts, opts.format == "text" ? render_text(report) : dump_deterministic(report),
            out);
}

int verdict_exit(bool holds) { return holds ? kExitHolds : kExitFails; }

void fill_condition(json& report, const ConditionReport& cond) {
  report["verdict"] = cond.holds ? "holds" : "fails";
  report["max_residual"] = cond.max_residual;
  report["lambda_table"] = lambda_table_to_json(cond.lambda);
  if (cond.witness) report["witness"] = witness_to_json(*cond.witness);
}

json decomposition_json(const SpaceDecomposition& d) {
  return json{{"dim_A", d.dim_a()},
              {"dim_B", d.dim_b()},
              {"dim_B1", d.dim_b1()},
              {"dim_perp", d.dim_perp()}};
}

// "|k><k|" when sigma is a computational basis projector, else empty.
std::string basis_projector_label(const Matrix& sigma, double tol) {
  for (Eigen::Index k = 0; k < sigma.rows(); ++k) {
    if (frobenius_distance(sigma, matrix_unit(static_cast<int>(sigma.rows()),
                                              static_cast<int>(k),
                                              static_cast<int>(k))) <= tol) {
      return "|" + std::to_string(k) + "><" + std::to_string(k) + "|";
    }
  }
  return {};
}

using Checker = ConditionReport (*)(const KrausChannel&, const SpaceDecomposition&,
                                    double);

int cmd_check(const std::string& name, Checker checker, const GlobalOptions& opts,
              const CommandArgs& args, std::ostream& out) {
  const ChannelFile file = parse_channel_file(args.channel, opts.tol);
  const ConditionReport cond = checker(file.channel, file.decomp, opts.tol);
  json report = make_report(name, opts.tol, opts.seed);
  fill_condition(report, cond);
  report["decomposition"] = decomposition_json(file.decomp);
  emit_report(opts, report, out);
  return verdict_exit(cond.holds);
}

int cmd_quadruple(const GlobalOptions& opts, const CommandArgs& args, std::ostream& out) {
  const ChannelFile channel = parse_channel_file(args.channel, opts.tol);
  const ChannelFile recovery = parse_channel_file(args.second, opts.tol);
  if (!(channel.decomp == recovery.decomp)) {
    throw InputError("channel and recovery files declare different decompositions");
  }
  if (args.reading != "enlarged" && args.reading != "b1") {
    throw InputError("--reading must be 'enlarged' or 'b1'");
  }
  const QuadrupleReport quad =
      args.reading == "b1"
          ? check_quadruple_normal(recovery.channel, channel.channel, channel.decomp, opts.tol)
          : check_quadruple(recovery.channel, channel.channel, channel.decomp, opts.tol);
  json report = make_report("check-quadruple", opts.tol, opts.seed);
  report["verdict"] = quad.holds ? "holds" : "fails";
  report["max_residual"] = quad.residual;
  report["reading"] = args.reading;
  report["decomposition"] = decomposition_json(channel.decomp);
  report["lambda_table"] = lambda_table_to_json(
      check_correctable(channel.channel, channel.decomp, opts.tol).lambda);
  if (quad.sigma) report["sigma"] = matrix_to_json(*quad.sigma);
  if (!quad.holds) {
    report["witness"] = json{{"kind", "quadruple"},
                             {"indices", json::array({quad.failing_element})},
                             {"residual", quad.residual},
                             {"detail", quad.failure}};
  }
  emit_report(opts, report, out);
  return verdict_exit(quad.holds);
}

int cmd_synthesize(const GlobalOptions& opts, const CommandArgs& args, std::ostream& out) {
  const ChannelFile file = parse_channel_file(args.channel, opts.tol);
  json report = make_report("synthesize", opts.tol, opts.seed);
  report["decomposition"] = decomposition_json(file.decomp);
  const ConditionReport cond = check_correctable(file.channel, file.decomp, opts.tol);
  fill_condition(report, cond);
  if (!cond.holds) {
    emit_report(opts, report, out);
    return kExitFails;
  }
  const Recovery rec = synthesize_recovery(file.channel, file.decomp, opts.tol);
  const QuadrupleReport cert =
      check_quadruple(rec.channel, file.channel, file.decomp, 10.0 * opts.tol);
  report["verdict"] = cert.holds ? "ok" : "fails";
  report["max_residual"] = std::max(cond.max_residual, cert.residual);
  report["eigenvalues"] = rec.eigenvalues;
  report["rank"] = rec.isometries.size();
  report["warnings"] = rec.warnings;
  if (cert.sigma) report["sigma"] = matrix_to_json(*cert.sigma);
  if (!cert.holds) {
    report["witness"] = json{{"kind", "quadruple"},
                             {"indices", json::array({cert.failing_element})},
                             {"residual", cert.residual},
                             {"detail", cert.failure}};
  }
  const json recovery_file = channel_to_json(rec.channel, file.decomp);
  if (args.recovery_out.empty()) {
    report["recovery"] = recovery_file;
  } else {
    write_text_file(args.recovery_out, dump_deterministic(recovery_file));
    report["recovery_path"] = args.recovery_out;
  }
  emit_report(opts, report, out);
  return verdict_exit(cert.holds);
}

int cmd_oracle(const GlobalOptions& opts, const CommandArgs& args, std::ostream& out) {
  if (opts.samples < 1) throw InputError("--samples must be >= 1");
  const ChannelFile file = parse_channel_file(args.channel, opts.tol);
  const OracleReport oracle = bruteforce_noiseless_oracle(
      file.channel, file.decomp, opts.samples, opts.seed, opts.tol);
  const ConditionReport algebra =
      check_ampliate_noiseless(file.channel, file.decomp, opts.tol);
  json report = make_report("oracle", opts.tol, opts.seed);
  report["verdict"] = oracle.holds ? "holds" : "fails";
  report["max_residual"] = oracle.worst_residual;
  report["lambda_table"] = lambda_table_to_json(algebra.lambda);
  report["samples"] = opts.samples;
  report["algebraic_recheck"] = oracle.algebraic_recheck;
  report["decomposition"] = decomposition_json(file.decomp);
  json sigmas = json::array();
  for (const auto& s : oracle.per_basis_sigmas) sigmas.push_back(matrix_to_json(s));
  report["per_basis_sigmas"] = std::move(sigmas);
  if (!oracle.holds) {
    report["witness"] = algebra.witness
                            ? witness_to_json(*algebra.witness)
                            : json{{"kind", "sample"},
                                   {"indices", json::array()},
                                   {"residual", oracle.worst_residual}};
  }
  emit_report(opts, report, out);
  return verdict_exit(oracle.holds);
}

DensityOperator require_b_state(const StateFile& state, const std::string& path,
                                double tol) {
  if (state.factor != Factor::kB) {
    throw InputError(path + ": classify-case expects a state with factor \"B\"");
  }
  try {
    return DensityOperator(state.matrix, tol);
  } catch (const std::invalid_argument& e) {
    throw InputError(path + ": " + e.what());
  }
}

int cmd_classify(const GlobalOptions& opts, const CommandArgs& args, std::ostream& out) {
  const StateFile first = parse_state_file(args.channel);
  const StateFile second = parse_state_file(args.second);
  if (!(first.decomp == second.decomp)) {
    throw InputError("state files declare different decompositions");
  }
  const DensityOperator rho1 = require_b_state(first, args.channel, opts.tol);
  const DensityOperator rho2 = require_b_state(second, args.second, opts.tol);
  const SupportCase which = classify_support_case(rho1, rho2, first.decomp, opts.tol);
  json report = make_report("classify-case", opts.tol, opts.seed);
  report["case"] = std::string(to_string(which));
  report["support_dims"] =
      json::array({support(rho1, opts.tol).dim(), support(rho2, opts.tol).dim()});
  report["decomposition"] = decomposition_json(first.decomp);
  emit_report(opts, report, out);
  return kExitHolds;
}

int cmd_apply(const GlobalOptions& opts, const CommandArgs& args, std::ostream& out) {
  const ChannelFile file = parse_channel_file(args.channel, opts.tol);
  const StateFile state = parse_state_file(args.second);
  if (state.factor != Factor::kH) {
    throw InputError(args.second + ": apply expects a state with factor \"H\"");
  }
  if (!(state.decomp == file.decomp)) {
    throw InputError("state and channel files declare different decompositions");
  }
  DensityOperator rho = [&] {
    try {
      return DensityOperator(state.matrix, opts.tol);
    } catch (const std::invalid_argument& e) {
      throw InputError(args.second + ": " + e.what());
    }
  }();
  const Matrix output = apply_channel(file.channel, rho);
  const json output_file = state_to_json(output, file.decomp, Factor::kH);
  if (!args.state_out.empty()) {
    write_text_file(args.state_out, dump_deterministic(output_file));
  }
  json report = make_report("apply", opts.tol, opts.seed);
  report["output"] = output_file;
  report["leak"] = restrict_to_c(output, file.decomp).leak;
  emit_report(opts, report, out);
  return kExitHolds;
}

int cmd_demo(const GlobalOptions& opts, const CommandArgs& args, std::ostream& out) {
  if (!(args.gamma > 0.0 && args.gamma < 1.0)) {
    throw InputError("--gamma must lie strictly between 0 and 1");
  }
  const ChannelInstance example = damped_flip_channel(args.gamma);
  if (args.emit) {
    emit_body(opts, dump_deterministic(channel_to_json(example.channel, example.decomp)),
              out);
    return kExitHolds;
  }
  const double tol = opts.tol;
  const CptpCheck cptp = validate_cptp(example.channel, tol);
  const ConditionReport ampliate =
      check_ampliate_noiseless(example.channel, example.decomp, tol);
  const ConditionReport normal =
      check_normal_noiseless(example.channel, example.decomp, tol);
  const ConditionReport correctable =
      check_correctable(example.channel, example.decomp, tol);
  const QuadrupleReport quad = check_quadruple(identity_channel(4), example.channel,
                                               example.decomp, tol);

  auto condition_json = [](const ConditionReport& c) {
    json j{{"verdict", c.holds ? "holds" : "fails"},
           {"max_residual", c.max_residual},
           {"lambda_table", lambda_table_to_json(c.lambda)},
           {"witness", nullptr}};
    if (c.witness) j["witness"] = witness_to_json(*c.witness);
    return j;
  };

  json report = make_report("demo", tol, opts.seed);
  report["gamma"] = args.gamma;
  report["decomposition"] = decomposition_json(example.decomp);
  report["checks"] = json{
      {"cptp", {{"verdict", cptp.ok ? "ok" : "fails"}, {"residual", cptp.residual}}},
      {"ampliate", condition_json(ampliate)},
      {"normal_noiseless", condition_json(normal)},
      {"correctable", condition_json(correctable)},
      {"identity_quadruple",
       {{"verdict", quad.holds ? "holds" : "fails"},
        {"residual", quad.residual},
        {"sigma", quad.sigma ? matrix_to_json(*quad.sigma) : json(nullptr)}}}};
  if (quad.sigma) report["sigma"] = matrix_to_json(*quad.sigma);
  report["max_residual"] = std::max({cptp.residual, ampliate.max_residual,
                                     correctable.max_residual, quad.residual});

  if (opts.format == "text") {
    std::ostringstream text;
    text << "channel: damped flip, gamma = " << args.gamma << "\n";
    text << "CPTP " << (cptp.ok ? "ok" : "FAILED") << " (residual " << cptp.residual
         << ")\n";
    text << "ampliate noiseless: " << (ampliate.holds ? "holds" : "fails") << "\n";
    text << "normal noiseless: " << (normal.holds ? "holds" : "fails");
    if (normal.witness) {
      text << " (" << normal.witness->kind << " witness on E"
           << normal.witness->indices.front() << ", residual "
           << normal.witness->residual << ")";
    }
    text << "\n";
    text << "correctable: " << (correctable.holds ? "holds" : "fails") << "\n";
    text << "identity-quadruple: " << (quad.holds ? "holds" : "fails");
    if (quad.sigma) {
      const std::string label = basis_projector_label(*quad.sigma, tol);
      if (!label.empty()) text << " with sigma = " << label;
    }
    text << "\n";
    emit_body(opts, text.str(), out);
  } else {
    emit_report(opts, report, out);
  }
  const bool as_expected = cptp.ok && ampliate.holds && !normal.holds &&
                           correctable.holds && quad.holds;
  return as_expected ? kExitHolds : kExitFails;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Noiseless-subsystem and correctability checks for Kraus channels",
               "goqec"};
  app.fallthrough();
  app.require_subcommand(1);

  GlobalOptions opts;
  CommandArgs cmd;
  app.add_option("--tol", opts.tol, "Residual tolerance (Frobenius norm)")
      ->capture_default_str();
  app.add_option("--seed", opts.seed, "Seed for random sampling")->capture_default_str();
  app.add_option("--samples", opts.samples, "Oracle sample count")->capture_default_str();
  app.add_option("--out", opts.out, "Write the report to this path instead of stdout");
  app.add_option("--format", opts.format, "Report format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  std::function<int()> action;
  auto channel_command = [&](const char* name, const char* help,
                             std::function<int()> fn) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("channel", cmd.channel, "Channel file")->required();
    sub->callback([&action, fn] { action = fn; });
    return sub;
  };

  channel_command("check-ampliate", "Ampliate noiseless subsystem test", [&] {
    return cmd_check("check-ampliate", &check_ampliate_noiseless, opts, cmd, out);
  });
  channel_command("check-noiseless", "Normal noiseless subsystem test (B := B1)", [&] {
    return cmd_check("check-noiseless", &check_normal_noiseless, opts, cmd, out);
  });
  channel_command("check-correctable", "Correctability of A ⊗ B1 inputs", [&] {
    return cmd_check("check-correctable", &check_correctable, opts, cmd, out);
  });
  auto* quad = channel_command("check-quadruple", "Recovery ∘ channel test",
                               [&] { return cmd_quadruple(opts, cmd, out); });
  quad->add_option("recovery", cmd.second, "Recovery channel file")->required();
  quad->add_option("--reading", cmd.reading,
                   "'enlarged' keeps B, 'b1' replaces B with B1")
      ->capture_default_str();
  auto* synth = channel_command("synthesize", "Build a recovery channel",
                                [&] { return cmd_synthesize(opts, cmd, out); });
  synth->add_option("--recovery-out", cmd.recovery_out,
                    "Write the recovery channel file here");
  channel_command("oracle", "Sampling cross-check of the ampliate test",
                  [&] { return cmd_oracle(opts, cmd, out); });
  auto* apply_cmd = channel_command("apply", "Apply a channel to a state file",
                                    [&] { return cmd_apply(opts, cmd, out); });
  apply_cmd->add_option("state", cmd.second, "State file (factor H)")->required();
  apply_cmd->add_option("--state-out", cmd.state_out, "Write the output state here");

  auto* classify = app.add_subcommand("classify-case", "Support case of a (rho1, rho2) pair");
  classify->add_option("rho1", cmd.channel, "State file for rho1 (factor B)")->required();
  classify->add_option("rho2", cmd.second, "State file for rho2 (factor B)")->required();
  classify->callback([&] { action = [&] { return cmd_classify(opts, cmd, out); }; });

  auto* demo = app.add_subcommand("demo", "Run every check on the built-in example");
  demo->add_option("--gamma", cmd.gamma, "Damping strength in (0, 1)")
      ->capture_default_str();
  demo->add_flag("--emit", cmd.emit, "Print the example channel file instead");
  demo->callback([&] { action = [&] { return cmd_demo(opts, cmd, out); }; });

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitHolds;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitHolds;
  } catch (const CLI::ParseError& e) {
    err << "goqec: " << e.what() << "\n";
    return kExitInvalidInput;
  }

  try {
    return action();
  } catch (const InputError& e) {
    err << "goqec: invalid input: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    err << "goqec: invalid input: " << e.what() << "\n";
  } catch (const std::out_of_range& e) {
    err << "goqec: invalid input: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "goqec: error: " << e.what() << "\n";
  }
  return kExitInvalidInput;
}

}  // namespace goqec::cli
