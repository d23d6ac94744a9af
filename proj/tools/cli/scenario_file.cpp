#include "scenario_file.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "nomacr/units.hpp"

namespace nomacr::cli {
namespace {

std::vector<std::string> split_words(const std::string& line) {
  std::istringstream ss(line.substr(0, line.find('#')));
  std::vector<std::string> words;
  for (std::string w; ss >> w;) words.push_back(w);
  return words;
}

double parse_number(const std::string& text, std::size_t line_no) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  if (!text.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError("scenario line " + std::to_string(line_no) + ": '" + text +
                     "' is not a number");
  }
  return value;
}

struct PendingSu {
  double gain = 0.0;
  double threshold = 0.0;
  std::optional<double> noise;
};

std::string exact(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// dB text for `linear`, or nothing if that text would not read back as the
// identical double.
std::optional<std::string> db_text(double linear) {
  const std::string text = exact(linear_to_db(linear));
  if (db_to_linear(std::stod(text)) != linear) return std::nullopt;
  return text;
}

std::optional<std::string> dbm_text(double watts) {
  const std::string text = exact(watts_to_dbm(watts));
  if (dbm_to_watts(std::stod(text)) != watts) return std::nullopt;
  return text;
}

}  // namespace

Scenario read_scenario(std::istream& in) {
  RawScenario raw;
  std::vector<PendingSu> sus;
  std::optional<double> default_noise;
  std::optional<double> p_max;

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto words = split_words(line);
    if (words.empty()) continue;
    const std::string& key = words[0];
    auto arity = [&](std::size_t lo, std::size_t hi) {
      const std::size_t got = words.size() - 1;
      if (got < lo || got > hi) {
        throw ParseError("scenario line " + std::to_string(line_no) + ": '" + key +
                         "' expects " + std::to_string(lo) +
                         (lo == hi ? "" : "-" + std::to_string(hi)) + " values, got " +
                         std::to_string(got));
      }
    };
    auto num = [&](std::size_t i) { return parse_number(words[i], line_no); };

    if (key == "pmax_dbm" || key == "pmax_w") {
      arity(1, 1);
      p_max = key == "pmax_w" ? num(1) : dbm_to_watts(num(1));
    } else if (key == "noise_dbm" || key == "noise_w") {
      arity(1, 1);
      default_noise = key == "noise_w" ? num(1) : dbm_to_watts(num(1));
    } else if (key == "su") {
      arity(2, 3);
      PendingSu su{db_to_linear(num(1)), db_to_linear(num(2)), std::nullopt};
      if (words.size() == 4) su.noise = dbm_to_watts(num(3));
      sus.push_back(su);
    } else if (key == "su_linear") {
      arity(2, 3);
      PendingSu su{num(1), num(2), std::nullopt};
      if (words.size() == 4) su.noise = num(3);
      sus.push_back(su);
    } else if (key == "pu") {
      arity(2, 2);
      raw.pu_gains.push_back(db_to_linear(num(1)));
      raw.pu_interference_limits.push_back(dbm_to_watts(num(2)));
    } else if (key == "pu_linear") {
      arity(2, 2);
      raw.pu_gains.push_back(num(1));
      raw.pu_interference_limits.push_back(num(2));
    } else {
      throw ParseError("scenario line " + std::to_string(line_no) + ": unknown key '" +
                       key + "'");
    }
  }
  if (!p_max) throw ParseError("scenario: missing pmax_dbm");

  for (std::size_t i = 0; i < sus.size(); ++i) {
    if (!sus[i].noise && !default_noise) {
      throw ParseError("scenario: secondary user " + std::to_string(i) +
                       " has no noise and no noise_dbm line is given");
    }
    raw.su_gains.push_back(sus[i].gain);
    raw.su_thresholds.push_back(sus[i].threshold);
    raw.su_noise.push_back(sus[i].noise ? *sus[i].noise : *default_noise);
  }
  raw.p_max = *p_max;
  return sort_users(std::move(raw));
}

Scenario read_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open scenario file '" + path + "'");
  return read_scenario(in);
}

void write_scenario(std::ostream& out, const Scenario& scenario) {
  const RawScenario raw = scenario.unsorted();

  if (auto t = dbm_text(raw.p_max)) {
    out << "pmax_dbm " << *t << '\n';
  } else {
    out << "pmax_w " << exact(raw.p_max) << '\n';
  }

  // A shared noise line when every user has the same noise.
  bool common_noise = !raw.su_noise.empty();
  for (double n : raw.su_noise) common_noise = common_noise && n == raw.su_noise.front();
  std::optional<std::string> common_noise_db;
  if (common_noise) {
    common_noise_db = dbm_text(raw.su_noise.front());
    if (common_noise_db) {
      out << "noise_dbm " << *common_noise_db << '\n';
    } else {
      out << "noise_w " << exact(raw.su_noise.front()) << '\n';
    }
  }

  for (std::size_t i = 0; i < raw.su_gains.size(); ++i) {
    const auto gain = db_text(raw.su_gains[i]);
    const auto thr = db_text(raw.su_thresholds[i]);
    const auto noise = common_noise ? std::optional<std::string>("") : dbm_text(raw.su_noise[i]);
    if (gain && thr && noise) {
      out << "su " << *gain << ' ' << *thr;
      if (!common_noise) out << ' ' << *noise;
    } else {
      out << "su_linear " << exact(raw.su_gains[i]) << ' ' << exact(raw.su_thresholds[i]);
      if (!common_noise) out << ' ' << exact(raw.su_noise[i]);
    }
    out << '\n';
  }

  for (std::size_t m = 0; m < raw.pu_gains.size(); ++m) {
    const auto gain = db_text(raw.pu_gains[m]);
    const auto limit = dbm_text(raw.pu_interference_limits[m]);
    if (gain && limit) {
      out << "pu " << *gain << ' ' << *limit << '\n';
    } else {
      out << "pu_linear " << exact(raw.pu_gains[m]) << ' '
          << exact(raw.pu_interference_limits[m]) << '\n';
    }
  }
}

}  // namespace nomacr::cli
