"""Flood-It and Free-Flood-It: game model, solvers, bounds and instance generators."""
from .board import (Board, FloodState, FreeState, Move, MoveSequence, RegionGraph, Variant,
                    apply_move, build_region_graph, is_flooded, parse_board, play_sequence,
                    serialize_board)

__version__ = "0.1.0"
