#include "resgame/session.hpp"

namespace resgame {

Session::Session(SessionOptions options) : options_(std::move(options)), prover_(options_.prover) {
  if (options_.jobs == 0) options_.jobs = 1;
}

}  // namespace resgame
