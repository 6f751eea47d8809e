import logging

from keras import callbacks

logger = logging.getLogger(__name__)


class TraceCSVLogger(callbacks.CSVLogger):
    """
    Streams the per-iteration trace of a solve to a CSV file.

    Columns are `iter,energy,residual_eq1,residual_eq2`; other entries of the flow logs are dropped.

    Parameters
    ----------
    filename : str
        Path of the CSV file.
    separator : str, optional
        Column separator. Defaults to `","`.
    every : int, optional
        Write every `every`-th iteration. Defaults to `1`.
    append : bool, optional
        Continue an existing trace instead of overwriting it. Defaults to `False`.

    """

    COLUMNS = ("iter", "energy", "residual_eq1", "residual_eq2")

    def __init__(self, filename, separator=",", every=1, append=False):
        super().__init__(filename, separator=separator, append=append)
        if every < 1:
            raise ValueError(f"`every` must be at least 1, received {every}.")
        self.every = every

    def on_train_begin(self, logs=None):
        super().on_train_begin(logs)
        # fixed columns; the parent would sort the log keys and add `val_` copies
        self.keys = list(self.COLUMNS[1:])
        if self.append_header:
            self.csv_file.write(self.sep.join(self.COLUMNS) + "\r\n")
            self.append_header = False

    def on_epoch_end(self, epoch, logs=None):
        if epoch % self.every:
            return
        return super().on_epoch_end(epoch, logs)


class EnergyStallStopping(callbacks.EarlyStopping):
    """
    Stops the flow once the energy stops decreasing.

    This is `keras.callbacks.EarlyStopping` monitoring `"energy"` in `"min"` mode, with a threshold
    gate: if `threshold` is set, the callback stays inactive until the energy undercuts it.

    Parameters
    ----------
    min_delta : float, optional
        Absolute decrease of the best energy that counts as progress. Defaults to `1e-12`.
    patience : int, optional
        Number of iterations without progress after which the flow is stopped. Defaults to `20`.
    threshold : float, optional
        Energy the flow must undercut before stalls are counted. Defaults to `None`.
    verbose : int, optional {0, 1}
        Mode 1 logs a message when the callback stops the flow. Defaults to `0`.

    """

    def __init__(self, min_delta=1e-12, patience=20, threshold=None, verbose=0):
        if min_delta < 0:
            raise ValueError(f"`min_delta` must be non-negative, received {min_delta}.")
        super().__init__(monitor="energy", min_delta=min_delta, patience=patience, verbose=verbose, mode="min")
        self.threshold = threshold
        self.threshold_matched_once = False

    def _is_improvement(self, monitor_value, reference_value):
        # plain floats: `keras.ops.less` compares in float32
        if reference_value is None:
            return True
        return float(monitor_value) - self.min_delta < float(reference_value)

    def on_train_begin(self, logs=None):
        super().on_train_begin(logs)
        self.threshold_matched_once = False
        self.best = (logs or {}).get("energy", self.baseline)

    def on_epoch_end(self, epoch, logs=None):
        if self.monitor_op is None:
            self._set_monitor_op()

        current = self.get_monitor_value(logs)
        if current is None or epoch < self.start_from_epoch:
            return

        # inactive until the energy falls below the threshold once
        if self.threshold is not None and not self.threshold_matched_once:
            if current < self.threshold:
                self.threshold_matched_once = True
            else:
                return

        if self._is_improvement(current, self.best):
            self.best = current
            self.best_epoch = epoch
            self.wait = 0
            return

        self.wait += 1
        if self.wait >= self.patience and epoch > 0:
            self.stopped_epoch = epoch
            self.model.stop_training = True
            if self.verbose > 0:
                logger.info("iteration %d: energy stalled for %d iterations, stopping", epoch, self.wait)

    def on_train_end(self, logs=None):
        # the parent prints through io_utils and restores weights the flow does not have
        pass
