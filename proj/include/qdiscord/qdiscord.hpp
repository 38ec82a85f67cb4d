// qdiscord.hpp: umbrella header

#pragma once

#include "qdiscord/analysis.hpp"
#include "qdiscord/discord.hpp"
#include "qdiscord/errors.hpp"
#include "qdiscord/evolution.hpp"
#include "qdiscord/model.hpp"
#include "qdiscord/reservoir.hpp"
