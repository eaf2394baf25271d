#include "cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <ostream>

#include "acnet/laplacian.hpp"
#include "acnet/report.hpp"
#include "svg_plot.hpp"

namespace acnet::cli {

namespace {

std::optional<double> parse_real(std::string_view text) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  if (text.empty() || text.front() == '+') return std::nullopt;
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) return std::nullopt;
  return value;
}

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Network load(const RunConfig& cfg, bool default_to_p4) {
  if (cfg.network_path && cfg.example_p4) throw InputError("--network and --example are exclusive");
  if (cfg.network_path) return load_network(*cfg.network_path);
  if (cfg.example_p4 || default_to_p4) return p4_example();
  throw InputError("specify --network <path> or --example p4");
}

template <typename Fn>
int guarded(std::ostream& err, Fn&& body) {
  try {
    return body();
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const NetworkError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const SolverError& e) {
    err << "solver failure: " << e.what() << '\n';
    return kSolverFailure;
  }
}

}  // namespace

std::optional<Complex> parse_complex(std::string_view text) {
  if (text.empty()) return std::nullopt;
  if (text.back() != 'i') {
    auto re = parse_real(text);
    if (!re) return std::nullopt;
    return Complex(*re, 0.0);
  }
  const std::string_view body = text.substr(0, text.size() - 1);
  // A bare "i" carries an implicit coefficient of one: "i", "-i", "2+i".
  auto imag_part = [](std::string_view coef) -> std::optional<double> {
    if (coef.empty() || coef == "+") return 1.0;
    if (coef == "-") return -1.0;
    return parse_real(coef);
  };
  // Split at the last sign that is not a leading sign or part of an exponent.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string_view::npos) {
    auto im = imag_part(body);
    if (!im) return std::nullopt;
    return Complex(0.0, *im);
  }
  auto re = parse_real(body.substr(0, split));
  auto im = imag_part(body.substr(split));
  if (!re || !im) return std::nullopt;
  return Complex(*re, *im);
}

int run_spectrum(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Network net = load(cfg, false);
    const ComplexFrequency s(cfg.frequency);
    const auto spectrum = laplacian_spectrum(net, s, cfg.dual, cfg.solver);
    out << "# s = " << format_complex(s.value()) << (cfg.dual ? " (dual network)" : "") << '\n';
    out << "# vertices = " << net.size() << '\n';
    for (std::size_t i = 0; i < spectrum.size(); ++i) {
      out << "eigenvalue " << format_complex(spectrum.eigenvalues[i]) << " residual "
          << format_real(spectrum.residuals[i]) << '\n';
    }
    out << "# by modulus\n";
    for (const auto& z : spectrum.by_modulus()) {
      out << "modulus " << format_real(std::abs(z)) << ' ' << format_complex(z) << '\n';
    }
    if (!spectrum.converged) {
      err << "solver failure: QR iteration did not converge after " << spectrum.sweeps << " sweeps\n";
      return int{kSolverFailure};
    }
    return int{kOk};
  });
}

int run_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Network net = load(cfg, false);
    // The dual network at s has the same Laplacian as the original at conj(s).
    const ComplexFrequency s = cfg.dual ? ComplexFrequency(std::conj(cfg.frequency))
                                        : ComplexFrequency(cfg.frequency);
    const auto report = verify(net, s, cfg.tolerances, cfg.solver);
    if (cfg.format != ReportFormat::KeyValue) out << to_text(report);
    if (cfg.format != ReportFormat::Text) out << to_key_value(report);
    if (!report.spectrum.converged) return int{kSolverFailure};
    return report.all_pass() ? int{kOk} : int{kVerificationFailure};
  });
}

int run_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (cfg.s1_values.empty()) throw InputError("sweep needs --s1 values");
    std::vector<SharpnessPoint> rows;
    if (cfg.network_path) {
      if (!cfg.sweep_any) throw InputError("sweeping a user network requires --sweep-any");
      rows = saturation_sweep(load(cfg, false), cfg.s1_values, cfg.s2, cfg.jobs);
    } else {
      rows = sharpness_sweep(cfg.s1_values, cfg.s2, cfg.jobs);
    }
    out << "# s1 s2 eigenvalue ratio\n";
    for (const auto& p : rows) {
      out << format_real(p.s1) << ' ' << format_real(p.s2) << ' ' << format_complex(p.target_eigenvalue)
          << ' ' << format_real(p.ratio) << '\n';
    }
    return int{kOk};
  });
}

int run_plot(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Network net = load(cfg, false);
    const ComplexFrequency s(cfg.frequency);
    const auto spectrum = laplacian_spectrum(net, s, cfg.dual, cfg.solver);
    if (!spectrum.converged) {
      err << "solver failure: QR iteration did not converge\n";
      return int{kSolverFailure};
    }
    const std::string svg = render_spectrum_svg(spectrum, s);
    if (!cfg.output_path) {
      out << svg;
      return int{kOk};
    }
    std::ofstream file(*cfg.output_path, std::ios::binary);
    file << svg;
    file.close();
    if (!file) throw InputError("cannot write '" + cfg.output_path->string() + "'");
    out << "wrote " << cfg.output_path->string() << '\n';
    return int{kOk};
  });
}

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  // "--s -1+0i" would otherwise be read as an unknown short option.
  std::vector<std::string> args;
  for (std::size_t i = 0; i < raw_args.size(); ++i) {
    if (raw_args[i] == "--s" && i + 1 < raw_args.size() && raw_args[i + 1].starts_with('-')) {
      args.push_back("--s=" + raw_args[++i]);
    } else {
      args.push_back(raw_args[i]);
    }
  }

  CLI::App app{"Spectra of normalized complex Laplacians of AC electrical networks", "acnet-spectra"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string network;
  std::string example;
  std::string frequency = "1";
  std::string out_path;
  std::vector<std::string> tol_overrides;
  std::string format = "text";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--network", network, "Network file");
    sub->add_option("--example", example, "Built-in example network")->check(CLI::IsMember({"p4"}));
    sub->add_option("--s", frequency, "Complex frequency, e.g. 1+2i")->capture_default_str();
    sub->add_flag("--dual", cfg.dual, "Use the dual network (conjugated admittances)");
    sub->add_option("--out", out_path, "Output file");
    sub->add_option("--jobs", cfg.jobs, "Worker threads for sweeps")->check(CLI::PositiveNumber);
    sub->add_option("--tol", tol_overrides, "Tolerance override name=value (repeatable)");
    sub->add_option("--qr-sweeps", cfg.solver.sweeps_per_eigenvalue, "QR sweep budget per eigenvalue")
        ->capture_default_str();
  };

  auto* spectrum = app.add_subcommand("spectrum", "Eigenvalues, residuals and modulus ordering");
  auto* verify_cmd = app.add_subcommand("verify", "Run every spectral check and report margins");
  auto* sweep = app.add_subcommand("sweep", "Circle-saturation sweep over s1 at fixed s2");
  auto* plot = app.add_subcommand("plot", "SVG figure of eigenvalues and regions");
  for (auto* sub : {spectrum, verify_cmd, sweep, plot}) add_common(sub);
  verify_cmd->add_option("--format", format, "text, kv or both")->check(CLI::IsMember({"text", "kv", "both"}));
  sweep->add_option("--s1", cfg.s1_values, "Comma-separated real parts")->delimiter(',');
  sweep->add_option("--s2", cfg.s2, "Imaginary part")->capture_default_str();
  sweep->add_flag("--sweep-any", cfg.sweep_any, "Allow sweeping a user network");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    if (auto* sub = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front()) {
      err << sub->help();
    } else {
      err << app.help();
    }
    return kInputError;
  }

  if (!network.empty()) cfg.network_path = network;
  cfg.example_p4 = example == "p4";
  if (!out_path.empty()) cfg.output_path = out_path;
  cfg.format = format == "kv" ? ReportFormat::KeyValue : format == "both" ? ReportFormat::Both : ReportFormat::Text;

  const auto s = parse_complex(frequency);
  if (!s) {
    err << "error: cannot parse frequency '" << frequency << "' (expected a, ai, a+bi or a-bi)\n";
    return kInputError;
  }
  if (!(s->real() > 0.0)) {
    err << "error: Re s must be positive\n";
    return kInputError;
  }
  cfg.frequency = *s;

  for (const auto& item : tol_overrides) {
    const auto eq = item.find('=');
    const auto value = eq == std::string::npos ? std::nullopt : parse_real(std::string_view(item).substr(eq + 1));
    if (!value || !(*value >= 0.0) || !set_tolerance(cfg.tolerances, item.substr(0, eq), *value)) {
      err << "error: bad tolerance override '" << item << "'\n";
      return kInputError;
    }
  }

  if (app.got_subcommand(spectrum)) return run_spectrum(cfg, out, err);
  if (app.got_subcommand(verify_cmd)) return run_verify(cfg, out, err);
  if (app.got_subcommand(sweep)) return run_sweep(cfg, out, err);
  return run_plot(cfg, out, err);
}

}  // namespace acnet::cli
