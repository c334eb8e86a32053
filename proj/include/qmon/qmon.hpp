#pragma once

#include "qmon/error.hpp"
#include "qmon/letter.hpp"
#include "qmon/words.hpp"
#include "qmon/queue.hpp"
#include "qmon/alphabet.hpp"
#include "qmon/trace.hpp"
#include "qmon/embed.hpp"
#include "qmon/rational.hpp"
#include "qmon/witness.hpp"
#include "qmon/json_io.hpp"
