"""Fully connected regression network trained with Adam on mean squared error.

Parameters are a list of ``(W, b)`` pairs. The helpers :func:`forward` and
:func:`loss_and_gradients` are plain functions so gradients can be checked
against finite differences.
"""
from __future__ import annotations

import numpy as np

from .linear import Standardizer

ACTIVATIONS = ("relu", "tanh")


class DivergenceError(FloatingPointError):
    def __init__(self, epoch: int, loss: float):
        self.epoch = epoch
        super().__init__(f"training diverged at epoch {epoch} (loss={loss})")


def init_params(layer_sizes, rng: np.random.Generator) -> list[tuple[np.ndarray, np.ndarray]]:
    """He-normal weights, zero biases."""
    params = []
    for fan_in, fan_out in zip(layer_sizes[:-1], layer_sizes[1:]):
        W = rng.normal(0.0, np.sqrt(2.0 / fan_in), size=(fan_in, fan_out))
        params.append((W, np.zeros(fan_out)))
    return params


def _act(z, activation):
    return np.maximum(z, 0.0) if activation == "relu" else np.tanh(z)


def _act_grad(z, a, activation):
    return (z > 0).astype(float) if activation == "relu" else 1.0 - a * a


def forward(params, X, activation: str = "relu") -> np.ndarray:
    a = np.asarray(X, dtype=float)
    for W, b in params[:-1]:
        a = _act(a @ W + b, activation)
    W, b = params[-1]
    return (a @ W + b).ravel()


def loss_and_gradients(params, X, y, activation: str = "relu"):
    """MSE loss and its gradients, one ``(dW, db)`` pair per layer."""
    X = np.asarray(X, dtype=float)
    y = np.asarray(y, dtype=float).ravel()
    zs, acts = [], [X]
    a = X
    for W, b in params[:-1]:
        z = a @ W + b
        a = _act(z, activation)
        zs.append(z)
        acts.append(a)
    W, b = params[-1]
    out = (a @ W + b).ravel()
    resid = out - y
    loss = float(np.mean(resid * resid))

    delta = (2.0 / y.size) * resid[:, None]
    grads = [None] * len(params)
    for layer in range(len(params) - 1, -1, -1):
        W, _ = params[layer]
        grads[layer] = (acts[layer].T @ delta, delta.sum(axis=0))
        if layer > 0:
            delta = (delta @ W.T) * _act_grad(zs[layer - 1], acts[layer], activation)
    return loss, grads


class MLPRegressor:
    def __init__(
        self,
        hidden: tuple[int, ...] = (64, 64),
        activation: str = "relu",
        learning_rate: float = 1e-3,
        epochs: int = 200,
        batch_size: int = 64,
        beta1: float = 0.9,
        beta2: float = 0.999,
        eps: float = 1e-8,
        seed: int = 0,
    ):
        if activation not in ACTIVATIONS:
            raise ValueError(f"activation must be one of {ACTIVATIONS}, got {activation!r}")
        self.hidden = tuple(hidden)
        self.activation = activation
        self.learning_rate = learning_rate
        self.epochs = epochs
        self.batch_size = batch_size
        self.beta1, self.beta2, self.eps = beta1, beta2, eps
        self.seed = seed

    def fit(self, X, y):
        X = np.atleast_2d(np.asarray(X, dtype=float))
        y = np.asarray(y, dtype=float).ravel()
        self.x_scaler_ = Standardizer().fit(X)
        self.y_mean_ = float(y.mean())
        # a constant target trains on zeros and predicts y_mean exactly
        self.y_scale_ = float(y.std())
        Xs = self.x_scaler_.transform(X)
        ys = (y - self.y_mean_) / (self.y_scale_ or 1.0)

        rng = np.random.default_rng(self.seed)
        params = init_params((X.shape[1], *self.hidden, 1), rng)
        m = [(np.zeros_like(W), np.zeros_like(b)) for W, b in params]
        v = [(np.zeros_like(W), np.zeros_like(b)) for W, b in params]
        n = y.size
        step = 0
        self.loss_curve_ = []
        for epoch in range(self.epochs):
            order = rng.permutation(n)
            total = 0.0
            for start in range(0, n, self.batch_size):
                batch = order[start:start + self.batch_size]
                loss, grads = loss_and_gradients(params, Xs[batch], ys[batch], self.activation)
                if not np.isfinite(loss):
                    raise DivergenceError(epoch, loss)
                total += loss * batch.size
                step += 1
                c1 = 1.0 - self.beta1 ** step
                c2 = 1.0 - self.beta2 ** step
                new = []
                for i, ((W, b), (gW, gb)) in enumerate(zip(params, grads)):
                    mW = self.beta1 * m[i][0] + (1 - self.beta1) * gW
                    mb = self.beta1 * m[i][1] + (1 - self.beta1) * gb
                    vW = self.beta2 * v[i][0] + (1 - self.beta2) * gW * gW
                    vb = self.beta2 * v[i][1] + (1 - self.beta2) * gb * gb
                    m[i], v[i] = (mW, mb), (vW, vb)
                    W = W - self.learning_rate * (mW / c1) / (np.sqrt(vW / c2) + self.eps)
                    b = b - self.learning_rate * (mb / c1) / (np.sqrt(vb / c2) + self.eps)
                    new.append((W, b))
                params = new
            epoch_loss = total / n
            if not np.isfinite(epoch_loss):
                raise DivergenceError(epoch, epoch_loss)
            self.loss_curve_.append(epoch_loss)
        self.params_ = params
        return self

    def predict(self, X) -> np.ndarray:
        Xs = self.x_scaler_.transform(np.atleast_2d(np.asarray(X, dtype=float)))
        return forward(self.params_, Xs, self.activation) * self.y_scale_ + self.y_mean_
