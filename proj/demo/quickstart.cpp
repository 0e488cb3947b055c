// Solve a cutting, build Alice's 4/9 strategy and check it against every
// reply Bob could make.

#include "pizza/pizza.hpp"

#include <iostream>

int main() {
  using namespace pizza;

  Cutting P = cutting_15(Rational(1, 2));
  std::cout << "pizza: " << format_cutting(P) << "  |P| = " << P.total() << "\n";

  ValueTable table = solve_optimal(P);
  std::cout << "optimal play: Alice " << table.alice_value() << ", Bob " << table.bob_value() << "\n";

  Strategy alice = alice_dispatch(P);
  BestResponse worst = best_response_gain(P, alice, Player::Alice);
  std::cout << alice.name << " promises " << alice.declared_gain << ", worst case " << worst.worst_gain << " with at most "
            << worst.max_jumps << " jumps over " << worst.games << " games\n";

  GameRecord game = play_game(P, alice, optimal_strategy(P, Player::Bob));
  for (const Turn& t : game.turns)
    std::cout << "  turn " << t.number << ": " << name(t.player) << " takes " << t.index << " (" << name(t.kind) << ")\n";
  std::cout << "result: Alice " << game.alice_gain << ", Bob " << game.bob_gain << "\n";
}
