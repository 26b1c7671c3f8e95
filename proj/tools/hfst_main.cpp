// Command-line interface: batch subcommands over the library.
//
// Exit codes: 0 success, 1 validity or precondition failure, 2 parse
// failure, 3 internal consistency failure.
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "hfst/hfst.hpp"
#include "hfst/io.hpp"
#include "hfst/pairing.hpp"
#include "hfst/seifert.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitParse = 2;
constexpr int kExitInconsistent = 3;

struct CliFailure {
  int code;
  std::string message;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CliFailure{kExitParse, "cannot open " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

hfst::InputDocument load(const std::string& path) {
  try {
    return hfst::parse_document(slurp(path));
  } catch (const hfst::ParseError& e) {
    throw CliFailure{kExitParse, path + ":" + e.what()};
  }
}

hfst::TypeD load_typed(const std::string& path) {
  hfst::InputDocument doc = load(path);
  if (doc.kind != hfst::DocKind::kTypeD)
    throw CliFailure{kExitInvalid, path + ": expected a type D document"};
  hfst::TypeD t = std::get<hfst::TypeD>(doc.body);
  hfst::ValidityReport r = hfst::check_typeD(t);
  if (!r.ok) throw CliFailure{kExitInvalid, path + ": " + r.message};
  return t;
}

int cmd_validate(const std::string& path) {
  hfst::InputDocument doc = load(path);
  hfst::ValidityReport r = hfst::validate_document(doc);
  if (!r.ok) throw CliFailure{kExitInvalid, path + ": " + r.message};
  std::cout << "ok\n";
  return kExitOk;
}

int cmd_pair(const std::string& file_a, const std::string& file_d,
             bool twisted, bool mor, bool dump) {
  if (mor) {
    if (file_a.empty())
      throw CliFailure{kExitInvalid, "--mor needs two type D files"};
    hfst::TypeD p1 = load_typed(file_a);
    hfst::TypeD p2 = load_typed(file_d);
    // Mirror the pairing-theorem hypothesis at the interface: one of the
    // two factors must be bounded.
    if (!hfst::is_bounded(p1).bounded && !hfst::is_bounded(p2).bounded)
      throw CliFailure{kExitInvalid,
                       "refusing to pair: one of the factors must be bounded"};
    hfst::ChainComplexF2 c = hfst::mor_pairing(p1, p2);
    std::cout << "homology_dim: " << c.homology_dim() << "\n";
    if (dump) std::cout << c.dump();
    return kExitOk;
  }
  hfst::AInftyMod x;
  if (file_a.empty()) {
    x = hfst::builtin_solid_module(twisted);
  } else {
    hfst::InputDocument doc = load(file_a);
    if (doc.kind != hfst::DocKind::kAinfty)
      throw CliFailure{kExitInvalid,
                       file_a + ": expected an A-infinity document"};
    if (twisted)
      throw CliFailure{kExitInvalid,
                       "--twisted selects the builtin module; drop the "
                       "explicit A-infinity file"};
    x = std::get<hfst::AInftyMod>(doc.body);
    hfst::ValidityReport r = hfst::check_ainfty(x);
    if (!r.ok) throw CliFailure{kExitInvalid, file_a + ": " + r.message};
  }
  hfst::TypeD p = load_typed(file_d);
  if (!hfst::is_bounded(x).bounded && !hfst::is_bounded(p).bounded)
    throw CliFailure{kExitInvalid,
                     "refusing to pair: one of the factors must be bounded"};
  hfst::PairedComplex c = hfst::box_tensor(x, p);
  std::cout << "homology_dim: " << hfst::homology_dim(c) << "\n";
  if (dump) std::cout << hfst::dump(c);
  return kExitOk;
}

hfst::HfstInput load_hfst_input(const std::string& path) {
  hfst::InputDocument doc = load(path);
  if (doc.kind == hfst::DocKind::kCurve) {
    const auto& c = std::get<hfst::MultiCurve>(doc.body);
    hfst::ValidityReport r = hfst::check_curve(c);
    if (!r.ok) throw CliFailure{kExitInvalid, path + ": " + r.message};
    return c;
  }
  if (doc.kind == hfst::DocKind::kTypeD) {
    hfst::TypeD t = std::get<hfst::TypeD>(doc.body);
    hfst::ValidityReport r = hfst::check_typeD(t);
    if (!r.ok) throw CliFailure{kExitInvalid, path + ": " + r.message};
    return t;
  }
  throw CliFailure{kExitInvalid,
                   path + ": expected a curve or type D document"};
}

int cmd_is_hfst(const std::string& path, int window) {
  hfst::HfstVerdict v = hfst::is_hfst(load_hfst_input(path), window);
  std::cout << "is_hfst: " << (v.is_hfst ? "true" : "false") << "\n";
  std::cout << "twisted_vanishing: " << (v.twisted_vanishing ? "true" : "false")
            << "\n";
  std::cout << "condition2_constant: "
            << (v.condition2_constant ? "true" : "false") << "\n";
  std::cout << "condition3_supported: "
            << (v.condition3_supported
                    ? (*v.condition3_supported ? "true" : "false")
                    : "not_applicable")
            << "\n";
  std::cout << "window: " << v.window << "\n";
  for (const auto& [k, dim] : v.condition2_dims)
    std::cout << "dim(" << k << "): " << dim << "\n";
  return kExitOk;
}

int cmd_fillings(const std::string& path, int window) {
  hfst::HfstInput input = load_hfst_input(path);
  if (window <= 0) {
    const hfst::MultiCurve* c = std::get_if<hfst::MultiCurve>(&input);
    hfst::TypeD p = c ? hfst::curve_to_typeD(*c) : std::get<hfst::TypeD>(input);
    window = static_cast<int>(p.gens.size()) + 2;
  }
  std::cout << "window: " << window << "\n";
  for (const auto& [k, dim] : hfst::filling_dims(input, window))
    std::cout << "dim(" << k << "): " << dim << "\n";
  return kExitOk;
}

int cmd_seifert(const std::string& path) {
  hfst::InputDocument doc = load(path);
  if (doc.kind != hfst::DocKind::kSeifert)
    throw CliFailure{kExitInvalid, path + ": expected a seifert document"};
  const auto& d = std::get<hfst::SeifertData>(doc.body);
  hfst::SeifertVerdict v = hfst::classify(d);
  std::cout << "is_hfst: " << (v.is_hfst ? "true" : "false") << "\n";
  std::cout << "reason: " << hfst::reason_name(v.reason) << "\n";
  std::cout << "e: " << v.lambda_vs_fiber.e.to_string() << "\n";
  long long fib = v.lambda_vs_fiber.lambda_fiber;
  std::cout << "lambda: " << v.lambda_vs_fiber.lambda_section << "*section"
            << (fib < 0 ? "-" : "+") << (fib < 0 ? -fib : fib) << "*fiber\n";
  std::cout << "delta_gamma_lambda: " << v.lambda_vs_fiber.delta << "\n";
  std::cout << "filled_form: " << v.filled_form << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact bordered invariants over the torus algebra and Heegaard Floer "
      "solid torus detection"};
  app.require_subcommand(1);

  std::string val_file;
  CLI::App* validate = app.add_subcommand("validate", "parse and check a file");
  validate->add_option("file", val_file)->required();

  std::string pair_a, pair_d;
  bool twisted = false, mor = false, dump = false;
  CLI::App* pair = app.add_subcommand(
      "pair", "box tensor (A-infinity against type D) or --mor pairing");
  pair->add_option("fileA", pair_a,
                   "A-infinity file; omitted = builtin solid-torus module");
  pair->add_option("fileD", pair_d, "type D file");
  pair->add_flag("--twisted", twisted,
                 "use the twisted builtin module (single-file form)");
  pair->add_flag("--mor", mor, "morphism pairing of two type D files");
  pair->add_flag("--dump", dump, "print the resulting complex");

  std::string hfst_file;
  int window = 0;
  CLI::App* ishfst =
      app.add_subcommand("is-hfst", "Heegaard Floer solid torus verdict");
  ishfst->add_option("file", hfst_file)->required();
  ishfst->add_option("--window", window, "filling sweep half-width");

  std::string fill_file;
  int fill_window = 0;
  CLI::App* fillings =
      app.add_subcommand("fillings", "Dehn filling dimension sweep");
  fillings->add_option("file", fill_file)->required();
  fillings->add_option("--window", fill_window, "sweep half-width");

  std::string seifert_file;
  CLI::App* seifert =
      app.add_subcommand("seifert", "Seifert fibered classification");
  seifert->add_option("file", seifert_file)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) return cmd_validate(val_file);
    if (pair->parsed()) {
      std::string a = pair_a, d = pair_d;
      if (d.empty()) {  // single-file form: builtin module against fileA
        d = a;
        a.clear();
      }
      if (d.empty()) throw CliFailure{kExitInvalid, "pair: missing type D file"};
      return cmd_pair(a, d, twisted, mor, dump);
    }
    if (ishfst->parsed()) return cmd_is_hfst(hfst_file, window);
    if (fillings->parsed()) return cmd_fillings(fill_file, fill_window);
    if (seifert->parsed()) return cmd_seifert(seifert_file);
  } catch (const CliFailure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.code;
  } catch (const hfst::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const hfst::ConsistencyError& e) {
    std::cerr << "internal consistency error: " << e.what() << "\n";
    return kExitInconsistent;
  } catch (const hfst::StructureError& e) {
    std::cerr << "internal consistency error: " << e.what() << "\n";
    return kExitInconsistent;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitOk;
}
