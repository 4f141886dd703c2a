#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace arena {

// Base of every error thrown by the library. Callers that only care about
// "something in the arena went wrong" catch this.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class TerminalState : public Error {
 public:
  TerminalState() : Error("game is already over") {}
};

class IllegalMove : public Error {
 public:
  IllegalMove(std::string token, std::string rule)
      : Error("illegal move '" + token + "': " + rule),
        token_(std::move(token)),
        rule_(std::move(rule)) {}
  const std::string& token() const { return token_; }
  const std::string& rule() const { return rule_; }

 private:
  std::string token_;
  std::string rule_;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class InvalidRuleSet : public Error {
 public:
  InvalidRuleSet(std::string field_a, std::string field_b, const std::string& why)
      : Error("invalid rule set (" + field_a + (field_b.empty() ? "" : " / " + field_b) + "): " + why),
        field_a_(std::move(field_a)),
        field_b_(std::move(field_b)) {}
  const std::string& field() const { return field_a_; }
  const std::string& other_field() const { return field_b_; }

 private:
  std::string field_a_;
  std::string field_b_;
};

class NotTerminal : public Error {
 public:
  NotTerminal() : Error("game is not over yet") {}
};

class UnknownPlayer : public Error {
 public:
  explicit UnknownPlayer(const std::string& id) : Error("unknown player '" + id + "'") {}
};

class UnknownVertex : public Error {
 public:
  explicit UnknownVertex(const std::string& id) : Error("unknown vertex '" + id + "'") {}
};

class DuplicatePair : public Error {
 public:
  DuplicatePair(const std::string& x, const std::string& y)
      : Error("pair (" + x + ", " + y + ") appears more than once") {}
};

class MalformedSeries : public Error {
 public:
  using Error::Error;
};

class EmptySamples : public Error {
 public:
  EmptySamples() : Error("no emotion samples") {}
};

class TooFewPlayers : public Error {
 public:
  TooFewPlayers() : Error("at least two players are required") {}
};

// An external agent did not answer within its timeout, or could not be reached.
class AgentUnreachable : public Error {
 public:
  using Error::Error;
};

class EngineInvariantViolation : public Error {
 public:
  using Error::Error;
};

class CorruptRecord : public Error {
 public:
  CorruptRecord(const std::string& match_id, int round, const std::string& why)
      : Error("corrupt record " + match_id + " at round " + std::to_string(round) + ": " + why),
        round_(round) {}
  int round() const { return round_; }

 private:
  int round_;
};

class ConfigError : public Error {
 public:
  ConfigError(std::string field, std::string why)
      : Error("config field '" + field + "': " + why), field_(std::move(field)), why_(std::move(why)) {}
  const std::string& field() const { return field_; }
  const std::string& why() const { return why_; }

 private:
  std::string field_;
  std::string why_;
};

}  // namespace arena
