#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "semiperm/core.hpp"
#include "semiperm/gset.hpp"
#include "semiperm/partition.hpp"

namespace semiperm {

  //! Text form: lines whose first non-blank character is '#' are ignored;
  //! then the order n and n^2 row-major entries, separated by whitespace.
  //!
  //! Throws ParseError on malformed or trailing input, ShapeError on
  //! out-of-range entries and NonAssociative on a non-associative table.
  FiniteSemigroup parse_sgp(std::string_view text);

  //! Structured form {"order": n, "table": [[...], ...], "labels": [...]}.
  //! "table" may also be flat. "labels" is optional.
  FiniteSemigroup parse_semigroup_json(std::string_view text);

  //! Structured form when the first non-blank, non-comment character is
  //! '{', text form otherwise.
  FiniteSemigroup parse_semigroup(std::string_view text);

  //! Text form, with the labels (if any) in a leading comment.
  std::string format_sgp(FiniteSemigroup const& S);

  nlohmann::json to_json(FiniteSemigroup const& S);

  //! Whole contents of a file, or of standard input for "-".
  //! Throws ParseError if the file cannot be read.
  std::string read_input(std::string const& path);

  FiniteSemigroup load_semigroup(std::string const& path);

  //! "m k" followed by the m x k action table, entry (x, g) = xg.
  //! Throws ParseError, or InvalidAction if k != |G| or the table is not an
  //! action.
  GSet parse_action(std::string_view text, FiniteGroup const& G);

  std::string format_action(GSet const& X);

  //! The class_of vector: entry a is the least member of the class of a.
  nlohmann::json to_json(Partition const& p);

  //! "{0,1|2}" style.
  std::string format_partition(Partition const& p);

}  // namespace semiperm
