#include "commands.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "circdeblur/circdeblur.hpp"

namespace circdeblur::cli {
namespace {

struct PsfOptions {
  std::string kind;
  std::string size;
  double radius = 1.0;
  double sigma = 1.0;
  std::size_t length = 1;
  double angle = 0.0;
  std::string output;
};

struct ImageOptions {
  std::string input;
  std::string output;
  std::string psf_file;
  bool ascii = false;
};

struct BlurOptions : ImageOptions {
  std::string model = "centered";
};

struct DeblurOptions : ImageOptions {
  std::string method = "modified";
  double gamma = 1e-3;
  double epsilon = 1e-12;
};

struct CompareOptions {
  std::string a;
  std::string b;
  std::string output;
  bool ascii = false;
};

// Accepts "7" or "5x7".
std::pair<std::size_t, std::size_t> parse_size(const std::string& text) {
  const auto x = text.find_first_of("xX");
  auto number = [](const std::string& s) -> std::size_t {
    std::size_t used = 0;
    const unsigned long v = s.empty() ? 0 : std::stoul(s, &used);
    if (s.empty() || used != s.size()) throw InvalidArgument("invalid mask size '" + s + "'");
    return v;
  };
  try {
    if (x == std::string::npos) {
      const auto n = number(text);
      return {n, n};
    }
    return {number(text.substr(0, x)), number(text.substr(x + 1))};
  } catch (const std::logic_error&) {
    throw InvalidArgument("invalid mask size '" + text + "'");
  }
}

std::size_t odd_ceiling(double half_width) { return 2 * static_cast<std::size_t>(std::ceil(half_width)) + 1; }

PsfSpec to_spec(const PsfOptions& o) {
  PsfSpec spec;
  spec.kind = parse_psf_kind(o.kind);
  spec.radius = o.radius;
  spec.sigma = o.sigma;
  spec.length = o.length;
  spec.angle_deg = o.angle;
  if (!o.size.empty()) {
    std::tie(spec.rows, spec.cols) = parse_size(o.size);
    return spec;
  }
  std::size_t side = 7;
  switch (spec.kind) {
    case PsfKind::kDefocus:
      side = odd_ceiling(std::max(o.radius, 0.0));
      break;
    case PsfKind::kGaussian:
      side = odd_ceiling(3.0 * std::max(o.sigma, 0.0));
      break;
    case PsfKind::kMotion:
      side = o.length == 0 ? 1 : 2 * o.length - 1;
      break;
    case PsfKind::kUniform:
      break;
  }
  spec.rows = spec.cols = side;
  return spec;
}

PgmFormat format_of(bool ascii) { return ascii ? PgmFormat::kAscii : PgmFormat::kBinary; }

Kernel2D load_psf(const std::string& path) { return parse_psf(read_file(path)); }

int cmd_psf(const PsfOptions& o, std::ostream& out) {
  const std::string text = format_psf(make_psf(to_spec(o)));
  if (o.output.empty() || o.output == "-") {
    out << text;
  } else {
    write_file(o.output, text);
  }
  return kSuccess;
}

int cmd_blur(const BlurOptions& o) {
  const Image f = to_unit(load_pgm(o.input));
  const Kernel2D h = load_psf(o.psf_file);
  Image g = o.model == "classic" ? circ_conv_2d_classic(f, h) : centered_conv_2d(f, h);
  save_pgm(o.output, from_unit(g), format_of(o.ascii));
  return kSuccess;
}

int cmd_deblur(const DeblurOptions& o) {
  const Image g = to_unit(load_pgm(o.input));
  const Kernel2D h = load_psf(o.psf_file);
  const ClsParams params{o.gamma, o.epsilon};
  const Image f = o.method == "classic" ? cls_classic(g, h, laplacian_mask(), params)
                                        : cls_modified(g, h, laplacian_mask(), params);
  save_pgm(o.output, from_unit(f), format_of(o.ascii));
  return kSuccess;
}

int cmd_compare(const CompareOptions& o, std::ostream& out) {
  const Image a = to_unit(load_pgm(o.a));
  const Image b = to_unit(load_pgm(o.b));
  const NormalizedDifference diff = normalized_difference(a, b);
  save_pgm(o.output, from_unit(diff.image), format_of(o.ascii));
  char line[64];
  std::snprintf(line, sizeof line, "rms=%.6f\n", diff.rms);
  out << line;
  return kSuccess;
}

int cmd_verify(const VerifyOptions& o, std::ostream& out) {
  const auto results = run_verification(o);
  out << format_report(results);
  return all_passed(results) ? kSuccess : kVerificationFailed;
}

void add_image_io(CLI::App* cmd, ImageOptions& o) {
  cmd->add_option("input", o.input, "Input PGM image")->required()->check(CLI::ExistingFile);
  cmd->add_option("-o,--output", o.output, "Output PGM image")->required();
  cmd->add_option("--psf-file", o.psf_file, "PSF mask in text form")->required()->check(CLI::ExistingFile);
  cmd->add_flag("--ascii", o.ascii, "Write plain (P2) instead of binary (P5) PGM");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Circular convolution, centered PSF convolution and CLS deblurring", "circdeblur"};
  app.require_subcommand(1);

  PsfOptions psf;
  auto* psf_cmd = app.add_subcommand("psf", "Generate a PSF mask");
  psf_cmd->add_option("--kind", psf.kind, "defocus | gaussian | motion | uniform")
      ->required()
      ->check(CLI::IsMember({"defocus", "gaussian", "motion", "uniform"}));
  psf_cmd->add_option("--size", psf.size, "Mask size, J or JxK (odd)");
  psf_cmd->add_option("--radius", psf.radius, "Defocus radius in pixels");
  psf_cmd->add_option("--sigma", psf.sigma, "Gaussian standard deviation in pixels");
  psf_cmd->add_option("--length", psf.length, "Motion length in samples");
  psf_cmd->add_option("--angle", psf.angle, "Motion direction in degrees");
  psf_cmd->add_option("-o,--output", psf.output, "Output file (default: standard output)");

  BlurOptions blur;
  auto* blur_cmd = app.add_subcommand("blur", "Blur an image with a PSF by circular convolution");
  add_image_io(blur_cmd, blur);
  blur_cmd->add_option("--model", blur.model, "centered (default) or classic")
      ->check(CLI::IsMember({"centered", "classic"}));

  DeblurOptions deblur;
  auto* deblur_cmd = app.add_subcommand("deblur", "Constrained least squares restoration");
  add_image_io(deblur_cmd, deblur);
  deblur_cmd->add_option("--method", deblur.method, "modified (default) or classic")
      ->check(CLI::IsMember({"modified", "classic"}));
  deblur_cmd->add_option("--gamma", deblur.gamma, "Regularization weight")->check(CLI::NonNegativeNumber);
  deblur_cmd->add_option("--epsilon", deblur.epsilon, "Denominator guard")->check(CLI::NonNegativeNumber);

  CompareOptions compare;
  auto* compare_cmd = app.add_subcommand("compare", "Normalized difference and RMS of two images");
  compare_cmd->add_option("a", compare.a, "First PGM image")->required()->check(CLI::ExistingFile);
  compare_cmd->add_option("b", compare.b, "Second PGM image")->required()->check(CLI::ExistingFile);
  compare_cmd->add_option("-o,--output", compare.output, "Normalized difference PGM")->required();
  compare_cmd->add_flag("--ascii", compare.ascii, "Write plain (P2) instead of binary (P5) PGM");

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check the convolution identities on random instances");
  verify_cmd->add_option("--max-size", verify.max_size, "Largest signal length / image side")
      ->check(CLI::Range(std::size_t{1}, std::size_t{64}));
  verify_cmd->add_option("--trials", verify.trials, "Random instances per check");
  verify_cmd->add_option("--seed", verify.seed, "Random seed");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    if (*psf_cmd) return cmd_psf(psf, out);
    if (*blur_cmd) return cmd_blur(blur);
    if (*deblur_cmd) return cmd_deblur(deblur);
    if (*compare_cmd) return cmd_compare(compare, out);
    if (*verify_cmd) return cmd_verify(verify, out);
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kIoError;
  }
  return kUsageError;
}

}  // namespace circdeblur::cli
