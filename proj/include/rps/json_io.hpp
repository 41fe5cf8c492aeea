#ifndef RPS_JSON_IO_HPP
#define RPS_JSON_IO_HPP

#include <string>

#include "rps/core.hpp"
#include "rps/game_table.hpp"
#include "rps/instance.hpp"
#include "rps/payment.hpp"

namespace rps {

// Instance files: {"players": n,
//                  "rewards": [{"set": [..], "value": w}, ...],
//                  "penalties": [...]}
// Players are 1-based; sets are order-insensitive but may not repeat a
// member. Type and shape problems raise Error(ParseError); semantic
// problems surface through RpsInstance::validate.
RawInstance parse_instance_json(const std::string& text);
RawInstance load_instance_file(const std::string& path);
std::string instance_to_json(const RpsInstance& instance);

// Game tables: {"players": n, "values": {"": "0", "1": "...", "1,2": ...}}
// keyed by comma-joined sorted coalitions; the empty key is the empty
// coalition. Every coalition must appear exactly once.
GameTable parse_game_table_json(const std::string& text);
GameTable load_game_table_file(const std::string& path);
std::string game_table_to_json(const GameTable& table);

// Payments are serialized as exact "num/den" strings ("num" when the
// denominator is 1).
std::string payments_to_json(const PaymentVector& payments);
PaymentVector parse_payment_list(const std::string& comma_separated);

// {"status":"in_core"} or
// {"status":"violation","property":"EFF|CR","coalition":[..],"gap":"num/den"}
std::string core_check_to_json(const CoreCheck& check);

}  // namespace rps

#endif  // RPS_JSON_IO_HPP
