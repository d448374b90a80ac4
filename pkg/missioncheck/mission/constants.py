NUM_NEIGHBOURS = 5
NUM_ENV_BITS = 2 * NUM_NEIGHBOURS
NUM_ENV_VALUATIONS = 1 << NUM_ENV_BITS
# low five bits of an environment code are threats, the high five other-UAV claims
THREAT_MASK = (1 << NUM_NEIGHBOURS) - 1

THREAT_PROPS = tuple(f"threat_in_cell{k}" for k in range(1, NUM_NEIGHBOURS + 1))
OTHER_UAV_PROPS = tuple(f"other_uav_selected_cell{k}" for k in range(1, NUM_NEIGHBOURS + 1))
CHOICE_PROPS = (*(f"choice_cell{k}" for k in range(1, NUM_NEIGHBOURS + 1)), "choice_no_free_cell")
PROPOSITIONS = (
    "heading_90",
    "heading_270",
    "north_cell",
    "south_cell",
    *THREAT_PROPS,
    *OTHER_UAV_PROPS,
    *CHOICE_PROPS,
    "at_sink",
)

VERDICT_CACHE_PREFIX = "mission_verdicts"
