from __future__ import annotations

from typing import Optional

import numpy as np

from djinn.data.scaling import ScalingParams
from djinn.net.network import Network
from djinn.schemas.model import NetworkSchema, ScalerSchema


def scaler_to_schema(params: Optional[ScalingParams]) -> Optional[ScalerSchema]:
    if params is None:
        return None
    return ScalerSchema(**params.to_dict())


def scaler_from_schema(schema: Optional[ScalerSchema]) -> Optional[ScalingParams]:
    if schema is None:
        return None
    return ScalingParams.from_dict(schema.model_dump())


def network_to_schema(net: Network, scaler: Optional[ScalingParams] = None) -> NetworkSchema:
    return NetworkSchema(
        widths=list(net.widths),
        weights=[w.tolist() for w in net.weights],
        biases=[b.tolist() for b in net.biases],
        task=net.task,
        scaler=scaler_to_schema(scaler),
    )


def network_from_schema(schema: NetworkSchema) -> tuple[Network, Optional[ScalingParams]]:
    net = Network(
        weights=[np.asarray(w, dtype=np.float64) for w in schema.weights],
        biases=[np.asarray(b, dtype=np.float64) for b in schema.biases],
        task=schema.task,
    )
    return net, scaler_from_schema(schema.scaler)
