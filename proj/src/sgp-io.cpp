#include "semiperm/sgp-io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <vector>

namespace semiperm {

  namespace {
    // Whitespace-separated tokens of all non-comment lines.
    std::vector<std::string_view> tokenize(std::string_view text) {
      std::vector<std::string_view> tokens;
      std::size_t                   pos = 0;
      while (pos < text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos) {
          end = text.size();
        }
        auto       line  = text.substr(pos, end - pos);
        auto const first = line.find_first_not_of(" \t\r\f\v");
        if (first != std::string_view::npos && line[first] != '#') {
          std::size_t i = 0;
          while (i < line.size()) {
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) {
              ++i;
            }
            auto const start = i;
            while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) {
              ++i;
            }
            if (i > start) {
              tokens.push_back(line.substr(start, i - start));
            }
          }
        }
        pos = end + 1;
      }
      return tokens;
    }

    long long to_integer(std::string_view token) {
      long long value = 0;
      auto const* last = token.data() + token.size();
      auto [ptr, ec]   = std::from_chars(token.data(), last, value);
      if (ec != std::errc() || ptr != last) {
        throw ParseError("expected an integer, found \"" + std::string(token)
                         + "\"");
      }
      return value;
    }

    char first_significant_char(std::string_view text) {
      for (auto const& token : tokenize(text)) {
        return token.front();
      }
      return '\0';
    }
  }  // namespace

  FiniteSemigroup parse_sgp(std::string_view text) {
    auto const tokens = tokenize(text);
    if (tokens.empty()) {
      throw ParseError("empty input: expected the order");
    }
    auto const n = to_integer(tokens[0]);
    if (n <= 0) {
      throw ParseError("the order must be positive");
    }
    if (n > 4096) {
      throw ParseError("the order " + std::to_string(n) + " is too large");
    }
    auto const cells = static_cast<std::size_t>(n * n);
    if (tokens.size() - 1 < cells) {
      throw ParseError("expected " + std::to_string(cells)
                       + " table entries, found "
                       + std::to_string(tokens.size() - 1));
    }
    if (tokens.size() - 1 > cells) {
      throw ParseError("trailing input after " + std::to_string(cells)
                       + " table entries");
    }
    std::vector<long long> flat;
    flat.reserve(cells);
    for (std::size_t i = 1; i < tokens.size(); ++i) {
      flat.push_back(to_integer(tokens[i]));
    }
    return validate_table(static_cast<std::size_t>(n), flat);
  }

  FiniteSemigroup parse_semigroup_json(std::string_view text) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (nlohmann::json::parse_error const& e) {
      throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("order") || !j.contains("table")) {
      throw ParseError("expected an object with \"order\" and \"table\"");
    }
    for (auto const& [key, value] : j.items()) {
      if (key != "order" && key != "table" && key != "labels") {
        throw ParseError("unexpected key \"" + key + "\"");
      }
    }
    if (!j["order"].is_number_integer() || j["order"].get<long long>() <= 0) {
      throw ParseError("\"order\" must be a positive integer");
    }
    auto const             n = j["order"].get<long long>();
    std::vector<long long> flat;
    try {
      for (auto const& entry : j["table"]) {
        if (entry.is_array()) {
          if (entry.size() != static_cast<std::size_t>(n)) {
            throw ShapeError("every row must have " + std::to_string(n)
                             + " entries");
          }
          for (auto const& x : entry) {
            flat.push_back(x.get<long long>());
          }
        } else {
          flat.push_back(entry.get<long long>());
        }
      }
    } catch (nlohmann::json::type_error const& e) {
      throw ParseError(std::string("table entries must be integers: ")
                       + e.what());
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) {
      try {
        labels = j["labels"].get<std::vector<std::string>>();
      } catch (nlohmann::json::type_error const& e) {
        throw ParseError(std::string("labels must be strings: ") + e.what());
      }
      if (labels.size() != static_cast<std::size_t>(n)) {
        throw ShapeError("expected " + std::to_string(n) + " labels");
      }
    }
    return validate_table(static_cast<std::size_t>(n), flat, std::move(labels));
  }

  FiniteSemigroup parse_semigroup(std::string_view text) {
    if (first_significant_char(text) == '{') {
      // comment lines are not valid JSON
      std::string body;
      std::size_t pos = 0;
      while (pos < text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos) {
          end = text.size();
        }
        auto       line  = text.substr(pos, end - pos);
        auto const first = line.find_first_not_of(" \t\r\f\v");
        if (first == std::string_view::npos || line[first] != '#') {
          body.append(line);
          body.push_back('\n');
        }
        pos = end + 1;
      }
      return parse_semigroup_json(body);
    }
    return parse_sgp(text);
  }

  std::string format_sgp(FiniteSemigroup const& S) {
    std::ostringstream out;
    if (!S.labels().empty()) {
      out << "# labels:";
      for (auto const& l : S.labels()) {
        out << ' ' << l;
      }
      out << '\n';
    }
    out << S.size() << '\n';
    for (element_id a = 0; a < S.size(); ++a) {
      for (element_id b = 0; b < S.size(); ++b) {
        out << (b == 0 ? "" : " ") << S.product(a, b);
      }
      out << '\n';
    }
    return out.str();
  }

  nlohmann::json to_json(FiniteSemigroup const& S) {
    nlohmann::json table = nlohmann::json::array();
    for (element_id a = 0; a < S.size(); ++a) {
      auto row = S.row(a);
      table.push_back(std::vector<element_id>(row.begin(), row.end()));
    }
    nlohmann::json out = {{"order", S.size()}, {"table", table}};
    if (!S.labels().empty()) {
      out["labels"] = S.labels();
    }
    return out;
  }

  std::string read_input(std::string const& path) {
    if (path == "-") {
      return {std::istreambuf_iterator<char>(std::cin),
              std::istreambuf_iterator<char>()};
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw ParseError("cannot read " + path);
    }
    return {std::istreambuf_iterator<char>(in),
            std::istreambuf_iterator<char>()};
  }

  FiniteSemigroup load_semigroup(std::string const& path) {
    return parse_semigroup(read_input(path));
  }

  GSet parse_action(std::string_view text, FiniteGroup const& G) {
    auto const tokens = tokenize(text);
    if (tokens.size() < 2) {
      throw ParseError("expected the header \"points group-order\"");
    }
    auto const m = to_integer(tokens[0]);
    auto const k = to_integer(tokens[1]);
    if (m <= 0 || m > 1 << 20) {
      throw ParseError("the number of points must be positive");
    }
    if (k != static_cast<long long>(G.size())) {
      throw InvalidAction("the action is over a group of order "
                          + std::to_string(k) + ", not "
                          + std::to_string(G.size()));
    }
    auto const cells = static_cast<std::size_t>(m * k);
    if (tokens.size() - 2 != cells) {
      throw ParseError("expected " + std::to_string(cells)
                       + " action entries, found "
                       + std::to_string(tokens.size() - 2));
    }
    std::vector<element_id> action;
    action.reserve(cells);
    for (std::size_t i = 2; i < tokens.size(); ++i) {
      auto const v = to_integer(tokens[i]);
      if (v < 0 || v >= m) {
        throw InvalidAction("action entry " + std::to_string(v)
                            + " out of range");
      }
      action.push_back(static_cast<element_id>(v));
    }
    return GSet(G, static_cast<std::size_t>(m), std::move(action));
  }

  std::string format_action(GSet const& X) {
    std::ostringstream out;
    auto const         k = X.group().size();
    out << X.points() << ' ' << k << '\n';
    for (element_id x = 0; x < X.points(); ++x) {
      for (element_id g = 0; g < k; ++g) {
        out << (g == 0 ? "" : " ") << X.act(x, g);
      }
      out << '\n';
    }
    return out.str();
  }

  nlohmann::json to_json(Partition const& p) {
    return p.class_vector();
  }

  std::string format_partition(Partition const& p) {
    std::string out = "{";
    bool        first_class = true;
    for (auto const& c : p.classes()) {
      if (!first_class) {
        out += "|";
      }
      first_class = false;
      for (std::size_t i = 0; i < c.size(); ++i) {
        out += (i == 0 ? "" : ",") + std::to_string(c[i]);
      }
    }
    return out + "}";
  }

}  // namespace semiperm
