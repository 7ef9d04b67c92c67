#ifndef BIDDING_IO_HPP_
#define BIDDING_IO_HPP_

#include <stdexcept>
#include <string>

#include "bidding/game.hpp"

namespace bidding {

// Malformed document. The message names the line/column or the field path.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

GameDescription parse_game_document(const std::string& text);
// Canonical form: sorted ids, sorted edges, two-space indentation.
std::string render_game_document(const FrugalParityGame& game);

// Parse + validate + normalize. Throws ParseError or GameError.
FrugalParityGame load_game(const std::string& path);
void save_game(const FrugalParityGame& game, const std::string& path);

// {"v0": "5", ...}, optionally wrapped as {"schema": 1, "thresholds": {...}}.
// Every vertex must be covered and no unknown vertex may appear.
ThresholdMap parse_threshold_document(const std::string& text,
                                      const FrugalParityGame& game);
std::string render_threshold_document(const FrugalParityGame& game,
                                      const ThresholdMap& t);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace bidding

#endif  // BIDDING_IO_HPP_
