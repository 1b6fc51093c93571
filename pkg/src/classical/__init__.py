"""Classical Max-Cut baselines."""
from .gw import GwEmbedding, GwResult, gw_embed, gw_rank, gw_round

__all__ = ["GwEmbedding", "GwResult", "gw_embed", "gw_rank", "gw_round"]
