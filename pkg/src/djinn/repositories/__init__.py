from .artifact_repository import ArtifactRepository, dumps_json, load_ensemble, load_model

__all__ = ["ArtifactRepository", "dumps_json", "load_ensemble", "load_model"]
