// Command line front end. Everything reads and writes JSON so results can be
// piped between invocations; rationals travel as "p/q" strings and stay
// exact. See the README for the file formats.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <chambers/chambers.hpp>
#include <chambers/io.hpp>

namespace {

using namespace chambers;

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return json::parse(in);
}

Vector<Rat> parse_point(const std::string& text) {
  Vector<Rat> point;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) point.push_back(parse_rational(part));
  if (point.empty()) throw std::runtime_error("empty point");
  return point;
}

FeasibilityMethod parse_method(const std::string& name) {
  if (name == "wolfe") return FeasibilityMethod::min_norm;
  if (name == "fm") return FeasibilityMethod::fourier_motzkin;
  throw std::runtime_error("unknown method '" + name + "' (expected wolfe or fm)");
}

void emit(const json& out) { std::cout << out.dump(2) << "\n"; }

json group_info(const std::string& type_name) {
  CoxeterGroup W{CoxeterType::parse(type_name)};
  json out;
  out["type"] = type_name;
  out["rank"] = W.rank();
  out["dimension"] = W.roots().dimension();
  out["order"] = W.order().get_str();
  out["positive_roots"] = W.roots().num_positive();
  out["degrees"] = degrees(W.type());
  return out;
}

json roots_info(const std::string& type_name) {
  RootSystem rs{CoxeterType::parse(type_name)};
  json out;
  out["type"] = type_name;
  out["dimension"] = rs.dimension();
  out["simple_roots"] = json::array();
  for (std::size_t s = 0; s < rs.rank(); ++s)
    out["simple_roots"].push_back(vector_to_json(rs.ambient(rs.simple_root_index(s))));
  out["cartan"] = json::array();
  for (std::size_t i = 0; i < rs.rank(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < rs.rank(); ++j) row.push_back(rs.cartan()(i, j));
    out["cartan"].push_back(std::move(row));
  }
  out["positive_roots"] = json::array();
  long best_height = -1;
  std::uint32_t highest = 0;
  for (std::uint32_t p = 0; p < rs.num_positive(); ++p) {
    json row;
    row["simple_coordinates"] = rs.root_coords(p);
    row["ambient"] = vector_to_json(rs.ambient(p));
    out["positive_roots"].push_back(std::move(row));
    long height = 0;
    for (long c : rs.root_coords(p)) height += c;
    if (height > best_height) {
      best_height = height;
      highest = p;
    }
  }
  out["highest_root"] = vector_to_json(rs.ambient(highest));
  out["highest_root_height"] = best_height;
  return out;
}

std::vector<std::size_t> parse_indices(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) out.push_back(std::stoul(part));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact chamber geometry of finite reflection arrangements"};
  app.require_subcommand(1);

  std::string type_name = "A2";
  std::string method_name = "wolfe";
  std::string point_text;
  std::string points_path;
  std::string system_path;
  std::string keep_text;
  std::string word_text;
  bool compress_vars = false;
  bool list_words = false;

  auto* group_cmd = app.add_subcommand("group", "Order, rank, degrees of a Coxeter group");
  group_cmd->add_option("--type", type_name, "Coxeter type, e.g. A3, B4, E6")->required();

  auto* roots_cmd = app.add_subcommand("roots", "Root system data: simples, positives, Cartan matrix");
  roots_cmd->add_option("--type", type_name)->required();

  auto* enum_cmd = app.add_subcommand("enumerate", "All chambers of an arrangement");
  enum_cmd->add_option("--type", type_name, "Reflection arrangement of this type");
  enum_cmd->add_option("--normals", points_path, "JSON file with arbitrary hyperplane normals");
  enum_cmd->add_option("--feasibility", method_name, "wolfe (default) or fm");

  auto* locate_cmd = app.add_subcommand("locate", "Group element whose chamber closure holds a point");
  locate_cmd->add_option("--type", type_name)->required();
  locate_cmd->add_option("--point", point_text, "Comma separated rationals, e.g. 1/2,-3,2")->required();

  auto* minnorm_cmd = app.add_subcommand("minnorm", "Minimum-norm point of a convex hull");
  minnorm_cmd->add_option("--points", points_path, "JSON file of points")->required();

  auto* feasible_cmd = app.add_subcommand("feasible", "Decide a mixed linear system by elimination");
  feasible_cmd->add_option("--system", system_path, "JSON file with constraints")->required();

  auto* strict_cmd = app.add_subcommand("strict", "Strict homogeneous feasibility with certificates");
  strict_cmd->add_option("--rows", points_path, "JSON file of row vectors")->required();
  strict_cmd->add_option("--method", method_name, "wolfe (default) or fm");

  auto* project_cmd = app.add_subcommand("project", "Project a system onto chosen coordinates");
  project_cmd->add_option("--system", system_path)->required();
  project_cmd->add_option("--keep", keep_text, "Comma separated variable indices to keep")->required();
  project_cmd->add_flag("--compress", compress_vars, "Renumber the kept variables densely");

  auto* words_cmd = app.add_subcommand("words", "Reduced words of a group element");
  words_cmd->add_option("--type", type_name)->required();
  words_cmd->add_option("--word", word_text, "Element as a word in the generators (default: longest)");
  words_cmd->add_flag("--list", list_words, "List every reduced word, not just the count");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(group_cmd)) {
      emit(group_info(type_name));
    } else if (app.got_subcommand(roots_cmd)) {
      emit(roots_info(type_name));
    } else if (app.got_subcommand(enum_cmd)) {
      FeasibilityMethod method = parse_method(method_name);
      if (!points_path.empty()) {
        auto normals = points_from_json(load_json(points_path));
        CentralArrangement<Rat> arr(normals.front().size(), normals);
        emit(chamber_complex_to_json(arr.enumerate_chambers(method)));
      } else {
        ReflectionArrangement ra(CoxeterType::parse(type_name));
        json out = chamber_complex_to_json(ra.enumerate(method));
        out["type"] = type_name;
        out["group_order"] = ra.group().order().get_str();
        emit(out);
      }
    } else if (app.got_subcommand(locate_cmd)) {
      ReflectionArrangement ra(CoxeterType::parse(type_name));
      auto loc = ra.locate(parse_point(point_text));
      json out;
      out["word"] = loc.word;
      out["length"] = loc.word.size();
      out["interior"] = loc.interior;
      out["representative"] = vector_to_json(loc.representative);
      out["signs"] = ra.chamber_signs(loc.element).to_string();
      emit(out);
    } else if (app.got_subcommand(minnorm_cmd)) {
      auto points = points_from_json(load_json(points_path));
      emit(min_norm_to_json(min_norm_point(points)));
    } else if (app.got_subcommand(feasible_cmd)) {
      auto sys = system_from_json(load_json(system_path));
      auto res = fm_feasible(sys);
      json out;
      out["feasible"] = res.feasible;
      if (res.feasible) out["witness"] = vector_to_json(res.witness);
      emit(out);
    } else if (app.got_subcommand(strict_cmd)) {
      auto rows = points_from_json(load_json(points_path));
      auto res = strict_feasibility(rows, rows.front().size(), parse_method(method_name));
      json out;
      out["feasible"] = res.feasible;
      if (res.feasible) {
        out["witness"] = vector_to_json(res.witness);
      } else if (!res.combination_support.empty()) {
        out["combination_support"] = res.combination_support;
        out["combination"] = json::array();
        for (const Rat& c : res.combination) out["combination"].push_back(rational_to_json(c));
      }
      emit(out);
    } else if (app.got_subcommand(project_cmd)) {
      auto sys = system_from_json(load_json(system_path));
      auto keep = parse_indices(keep_text);
      auto projected = project_onto(sys, keep);
      emit(system_to_json(compress_vars ? compress(projected, keep) : projected));
    } else if (app.got_subcommand(words_cmd)) {
      CoxeterGroup W{CoxeterType::parse(type_name)};
      Element w = W.longest_element();
      if (!word_text.empty()) w = W.from_word(parse_indices(word_text));
      json out;
      out["type"] = type_name;
      out["canonical_word"] = W.canonical_word(w);
      out["length"] = W.length(w);
      out["reduced_words"] = count_maximal_chains(W, w).get_str();
      if (list_words) {
        out["words"] = json::array();
        for (const auto& word : W.all_reduced_words(w)) out["words"].push_back(word);
      }
      emit(out);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
