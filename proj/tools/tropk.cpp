#include "tropk/error.hpp"
#include "tropk/gersten.hpp"
#include "tropk/json_io.hpp"
#include "tropk/kgroups.hpp"
#include "tropk/valuation.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

namespace {

using tropk::Json;

Json read_json(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  } else {
    std::ifstream in(path);
    if (!in) throw tropk::Error(tropk::ErrorKind::InvalidInput,
                                "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  try {
    return Json::parse(text);
  } catch (const std::exception& e) {
    throw tropk::Error(tropk::ErrorKind::InvalidInput, e.what());
  }
}

void emit(const Json& doc) { std::cout << doc.dump(2) << "\n"; }

int exit_code(tropk::ErrorKind kind) {
  switch (kind) {
    case tropk::ErrorKind::IndeterminateSign:
      return 3;
    case tropk::ErrorKind::Mismatch:
    case tropk::ErrorKind::DifferentialNotSquareZero:
      return 2;
    default:
      return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact tropical fan, valuation, and K-class calculator"};
  app.require_subcommand(1);

  if (const char* depth = std::getenv("TROPK_INTERVAL_DEPTH"))
    tropk::interval_depth() = std::atoi(depth);

  std::string poly_path, fan_path, flag_path, symbol_path, lattice_path,
      class_path;
  int p = 1;
  unsigned seed = 0;
  int steps = 1;
  bool check_chow = false, at_infinity = false, restrict_classes = false;
  std::string at_point;

  CLI::App* hyp = app.add_subcommand("hyp", "tropical hypersurface of a polynomial");
  hyp->add_option("poly", poly_path, "polynomial document")->required();

  CLI::App* fp = app.add_subcommand("fp", "dimension of the degree-p class space");
  fp->add_option("--fan", fan_path)->required();
  fp->add_option("-p", p)->required();

  CLI::App* locate = app.add_subcommand("locate", "cone of a fan holding a flag");
  locate->add_option("--fan", fan_path)->required();
  locate->add_option("--flag", flag_path)->required();

  CLI::App* refine = app.add_subcommand("refine", "seeded random stellar refinement");
  refine->add_option("--fan", fan_path)->required();
  refine->add_option("--seed", seed)->required();
  refine->add_option("--steps", steps);

  CLI::App* gersten = app.add_subcommand("gersten", "weight-p complex dimensions");
  gersten->add_option("--fan", fan_path)->required();
  gersten->add_option("-p", p)->required();
  gersten->add_flag("--check-chow", check_chow);

  CLI::App* chow = app.add_subcommand("chow", "Chow oracle dimension");
  chow->add_option("--fan", fan_path)->required();
  chow->add_option("-p", p)->required();

  CLI::App* vheight = app.add_subcommand("val-height", "height of a flag's value group");
  vheight->add_option("--flag", flag_path)->required();

  CLI::App* vreduce = app.add_subcommand("val-reduce", "canonical form of a flag");
  vreduce->add_option("--flag", flag_path)->required();

  CLI::App* residue = app.add_subcommand("residue", "tame residue of a univariate symbol");
  residue->add_option("--symbol", symbol_path)->required();
  residue->add_option("--at", at_point, "rational point t = c");
  residue->add_flag("--infinity", at_infinity);

  CLI::App* transfer = app.add_subcommand("transfer", "transfer or restriction along a sublattice");
  transfer->add_option("--sublattice", lattice_path)->required();
  transfer->add_option("--class", class_path)->required();
  transfer->add_option("-p", p)->required();
  transfer->add_flag("--restrict", restrict_classes);

  CLI11_PARSE(app, argc, argv);

  try {
    if (hyp->parsed()) {
      emit(tropk::fan_to_json(
          tropk::tropical_hypersurface(tropk::poly_from_json(read_json(poly_path)))));
    } else if (fp->parsed()) {
      tropk::Fan f = tropk::fan_from_json(read_json(fan_path));
      Json out;
      out["p"] = p;
      out["dim"] = tropk::f_spaces(f, p).class_dim();
      emit(out);
    } else if (locate->parsed()) {
      tropk::Fan f = tropk::fan_from_json(read_json(fan_path));
      tropk::Flag x = tropk::flag_from_json(read_json(flag_path));
      emit(tropk::cone_to_json(tropk::limit_point(f, tropk::canonicalize(x))));
    } else if (refine->parsed()) {
      tropk::Fan f = tropk::fan_from_json(read_json(fan_path));
      std::mt19937 rng(seed);
      std::uniform_int_distribution<int> coeff(1, 3);
      for (int s = 0; s < steps; ++s) {
        const std::vector<int>& maximal = f.maximal();
        const tropk::Cone& c =
            f.cones()[maximal[rng() % maximal.size()]];
        tropk::ZVec ray(f.rank(), 0);
        for (const tropk::ZVec& r : c.rays()) {
          tropk::Int a(coeff(rng));
          for (int i = 0; i < f.rank(); ++i) ray[i] += a * r[i];
        }
        if (tropk::is_zero(ray)) continue;
        f = tropk::stellar_subdivision(f, tropk::primitive(ray));
      }
      emit(tropk::fan_to_json(f));
    } else if (gersten->parsed()) {
      tropk::Fan f = tropk::fan_from_json(read_json(fan_path));
      tropk::ToricGerstenComplex cx = tropk::build_complex(f, p);
      std::vector<int> h = tropk::cohomology_dims(cx);
      Json out;
      out["p"] = p;
      out["term_dims"] = cx.term_dims;
      out["h"] = h;
      out["top_cokernel"] = h.back();
      if (check_chow) {
        int oracle = tropk::chow_oracle(f, p);
        out["chow_oracle"] = oracle;
        out["match"] = h.back() == oracle;
        emit(out);
        return h.back() == oracle ? 0 : 2;
      }
      emit(out);
    } else if (chow->parsed()) {
      tropk::Fan f = tropk::fan_from_json(read_json(fan_path));
      Json out;
      out["p"] = p;
      out["dim"] = tropk::chow_oracle(f, p);
      emit(out);
    } else if (vheight->parsed()) {
      tropk::Flag x = tropk::flag_from_json(read_json(flag_path));
      tropk::HeightResult h =
          tropk::group_height(tropk::flag_value_group(x));
      Json out;
      out["height"] = h.height;
      out["rational_rank"] = h.rational_rank;
      emit(out);
    } else if (vreduce->parsed()) {
      tropk::Flag x = tropk::flag_from_json(read_json(flag_path));
      tropk::Flag c = tropk::canonicalize(x);
      Json out = tropk::flag_to_json(c);
      out["height"] = tropk::flag_height(c);
      emit(out);
    } else if (residue->parsed()) {
      int vars = 0;
      std::vector<tropk::SymbolEntry> entries =
          tropk::symbol_from_json(read_json(symbol_path), vars);
      if (vars != 1)
        throw tropk::Error(tropk::ErrorKind::UnsupportedEntry,
                           "tame residues are univariate");
      if (at_infinity != at_point.empty())
        throw tropk::Error(tropk::ErrorKind::InvalidInput,
                           "give exactly one of --at and --infinity");
      // rewrite monomials and constants as factored functions
      for (tropk::SymbolEntry& e : entries)
        if (e.kind != tropk::SymbolEntry::Factored) {
          tropk::SymbolEntry f;
          f.kind = tropk::SymbolEntry::Factored;
          f.f = e.kind == tropk::SymbolEntry::Constant
                    ? tropk::FactoredFunction::make(e.c, {})
                    : tropk::FactoredFunction::make(
                          tropk::Rat(1),
                          {{tropk::Rat(0),
                            static_cast<int>(e.exponent.at(0))}});
          e = std::move(f);
        }
      std::vector<tropk::FactoredFunction> symbol;
      for (const tropk::SymbolEntry& e : entries) symbol.push_back(e.f);
      tropk::ResiduePoint pt =
          at_infinity ? tropk::ResiduePoint::infinity()
                      : tropk::ResiduePoint::at(tropk::rat_from_string(at_point));
      emit(tropk::k1_wedge_to_json(tropk::tame_residue(symbol, pt)));
    } else if (transfer->parsed()) {
      Json lat = read_json(lattice_path);
      tropk::ZMat basis;
      for (const Json& row : lat.at("basis")) {
        tropk::ZVec r;
        for (const Json& e : row) r.push_back(tropk::Int(e.get<long long>()));
        basis.push_back(std::move(r));
      }
      Json cj = read_json(class_path);
      tropk::QVec cls;
      for (const Json& e : cj.at("coords"))
        cls.push_back(tropk::rat_from_json(e));
      tropk::QVec out = restrict_classes
                            ? tropk::k_restriction(basis, p, cls)
                            : tropk::monomial_transfer(basis, p, cls);
      Json doc;
      Json coords = Json::array();
      for (const tropk::Rat& x : out) coords.push_back(tropk::rat_to_json(x));
      doc["coords"] = std::move(coords);
      emit(doc);
    }
  } catch (const tropk::Error& e) {
    Json err;
    err["error"]["kind"] = tropk::error_kind_name(e.kind());
    err["error"]["message"] = e.what();
    emit(err);
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    Json err;
    err["error"]["kind"] = "InvalidInput";
    err["error"]["message"] = e.what();
    emit(err);
    return 1;
  }
  return 0;
}
