#pragma once

#include "resgame/bag.hpp"
#include "resgame/coop.hpp"
#include "resgame/error.hpp"
#include "resgame/formula.hpp"
#include "resgame/game.hpp"
#include "resgame/game_io.hpp"
#include "resgame/nash.hpp"
#include "resgame/prover.hpp"
#include "resgame/rational.hpp"
#include "resgame/sequent.hpp"
#include "resgame/session.hpp"
#include "resgame/syntax.hpp"
